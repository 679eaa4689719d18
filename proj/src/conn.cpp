#include "webconn/conn.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "webconn/conn4.hpp"

namespace webconn {

namespace {

struct RatDiff {
    RatFunc x(const RatFunc& f) const { return f.derivative(Var::x); }
    RatFunc y(const RatFunc& f) const { return f.derivative(Var::y); }
};

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Coefficients of the degree-4 printed forms: order-0 v's and alpha.
struct Printed4 {
    RatFunc v1, v2, v3, v4, a1, a2;
};

Printed4 printed4(const WebEquation& web, const AssociatedPair& pair0) {
    const Form1 alpha = fundamental_form(web, pair0).alpha;
    return {pair0.v(4, 1), pair0.v(4, 2), pair0.v(4, 3), pair0.v(4, 4), alpha.cx, alpha.cy};
}

void assert_printed_system(const WebEquation& web, const RatMatrix& a,
                           const std::vector<AssociatedPair>& pairs) {
    const int d = web.d();
    const AssociatedPair& p0 = pairs[0];
    const Form1 alpha = fundamental_form(web, p0).alpha;
    const RatFunc& A1 = alpha.cx;
    const RatFunc& A2 = alpha.cy;
    auto v = [&](int j) { return p0.v(d, j); };
    RatMatrix expected;
    if (d == 4) {
        expected = {{-v(4), A1}, {A1 - v(3), A2}, {A2 - v(2), v(1)}};
    } else if (d == 5) {
        auto q = [&](size_t i) { return web.a(i) / web.a(0); };
        const RatFunc two(2);
        expected = {{q(5) * v(1), -v(5), A1},
                    {-two * v(5) + q(4) * v(1), A1 - v(4), A2},
                    {A1 - two * v(4) + q(3) * v(1), A2 - v(3), two * v(2) - q(1) * v(1)},
                    {A2 - two * v(3) + q(2) * v(1), v(2) - q(1) * v(1), v(1)}};
    } else {
        return;
    }
    if (a != expected)
        fail(ErrorKind::Internal, "system matrix disagrees with its closed form");
}

} // namespace

SystemMatrix system_matrix(const WebEquation& web, const std::vector<AssociatedPair>& pairs) {
    const int d = web.d();
    if (pairs.size() != static_cast<size_t>(d - 2))
        fail(ErrorKind::Dependency, "need associated pairs of all orders 0..d-3");
    SystemMatrix m;
    m.d = d;
    m.A.assign(static_cast<size_t>(d - 1), RatVector(static_cast<size_t>(d - 2)));
    for (int i = 0; i < d - 1; ++i) {
        for (int j = 0; j < d - 2; ++j) {
            const AssociatedPair& pr = pairs[static_cast<size_t>(d - 3 - j)];
            const PPoly sum = pr.U + pr.V.derivative_p();
            m.A[static_cast<size_t>(i)][static_cast<size_t>(j)] = -sum.coeff(static_cast<size_t>(i));
        }
    }
    assert_printed_system(web, m.A, pairs);
    return m;
}

SystemMatrix system_matrix(const WebEquation& web) {
    return system_matrix(web, all_associated_pairs(web));
}

ClosednessResidual closedness_residual(const SystemMatrix& m) {
    ClosednessResidual out;
    for (int i = 1; i <= m.d - 1; ++i) {
        ClosednessResidual::Row row;
        const int jx = m.d + 1 - i;
        const int jy = m.d + 2 - i;
        row.dx_symbol = (jx >= 3 && jx <= m.d) ? jx : 0;
        row.dy_symbol = (jy >= 3 && jy <= m.d) ? jy : 0;
        row.a_row = m.A[static_cast<size_t>(i - 1)];
        out.rows.push_back(std::move(row));
    }
    return out;
}

bool ClosednessResidual::staircase_ok(int d) const {
    if (rows.size() != static_cast<size_t>(d - 1)) return false;
    for (int i = 1; i <= d - 1; ++i) {
        const Row& r = rows[static_cast<size_t>(i - 1)];
        const int jx = d + 1 - i;
        const int jy = d + 2 - i;
        if (r.dx_symbol != ((jx >= 3 && jx <= d) ? jx : 0)) return false;
        if (r.dy_symbol != ((jy >= 3 && jy <= d) ? jy : 0)) return false;
        if (r.a_row.size() != static_cast<size_t>(d - 2)) return false;
    }
    return true;
}

namespace {

// Flattening of the jet coordinates (k, a, b), a+b <= max_order, listed per
// function by increasing total order, x-derivatives first.
std::vector<JetCoord> enumerate_coords(int funcs, int max_order) {
    std::vector<JetCoord> coords;
    for (int k = 0; k < funcs; ++k)
        for (int t = 0; t <= max_order; ++t)
            for (int a = t; a >= 0; --a) coords.push_back({k, a, t - a});
    return coords;
}

struct CoordIndex {
    std::map<std::array<int, 3>, size_t> map;

    explicit CoordIndex(const std::vector<JetCoord>& coords) {
        for (size_t i = 0; i < coords.size(); ++i) map[{coords[i].k, coords[i].a, coords[i].b}] = i;
    }
    size_t at(int k, int a, int b) const { return map.at({k, a, b}); }
};

RatMatrix prolonged_equations(const SystemMatrix& sys, const std::vector<JetCoord>& coords,
                              const CoordIndex& index) {
    const int d = sys.d;
    const int funcs = d - 2;
    // memoized mixed derivatives of the system matrix
    std::map<std::pair<int, int>, RatMatrix> deriv;
    deriv[{0, 0}] = sys.A;
    std::function<const RatMatrix&(int, int)> a_deriv = [&](int s, int t) -> const RatMatrix& {
        auto it = deriv.find({s, t});
        if (it != deriv.end()) return it->second;
        const RatMatrix& prev = s > 0 ? a_deriv(s - 1, t) : a_deriv(s, t - 1);
        const Var var = s > 0 ? Var::x : Var::y;
        RatMatrix next = prev;
        for (auto& row : next)
            for (auto& e : row) e = e.derivative(var);
        return deriv.emplace(std::pair<int, int>{s, t}, std::move(next)).first->second;
    };

    RatMatrix eqs;
    for (int c = 0; c <= d - 3; ++c) {
        for (int e = 0; c + e <= d - 3; ++e) {
            for (int i = 1; i <= d - 1; ++i) {
                RatVector row(coords.size());
                const int kx = d - 2 - i; // function of b_{d+1-i}
                if (kx >= 0 && kx < funcs) row[index.at(kx, c + 1, e)] += RatFunc(1);
                const int ky = d - 1 - i; // function of b_{d+2-i}
                if (ky >= 0 && ky < funcs) row[index.at(ky, c, e + 1)] += RatFunc(1);
                for (int j = 0; j < funcs; ++j) {
                    for (int s = 0; s <= c; ++s) {
                        for (int t = 0; t <= e; ++t) {
                            const RatFunc& coeff =
                                a_deriv(s, t)[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
                            if (coeff.is_zero()) continue;
                            row[index.at(j, c - s, e - t)] +=
                                RatFunc(Rational(binom(c, s) * binom(e, t))) * coeff;
                        }
                    }
                }
                eqs.push_back(std::move(row));
            }
        }
    }
    return eqs;
}

std::vector<RatVector> printed_basis_4(const WebEquation& web, const SystemMatrix& sys) {
    d4::SystemEntries<RatFunc> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) m.a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            sys.A[static_cast<size_t>(i)][static_cast<size_t>(j)];
    const auto basis = d4::adapted_basis(m, RatDiff{});
    std::vector<RatVector> out;
    for (const auto& e : basis) {
        RatVector v;
        for (int k = 0; k < 2; ++k)
            for (int col = 0; col < 6; ++col) v.push_back(e[static_cast<size_t>(k)][static_cast<size_t>(col)]);
        out.push_back(std::move(v));
    }
    (void)web;
    return out;
}

void check_in_kernel(const RatMatrix& eqs, const std::vector<RatVector>& basis) {
    for (const RatVector& v : basis) {
        for (const RatVector& row : eqs) {
            RatFunc acc;
            for (size_t c = 0; c < row.size(); ++c) acc += row[c] * v[c];
            if (!acc.is_zero())
                fail(ErrorKind::Internal, "adapted basis vector is not in the kernel");
        }
    }
}

} // namespace

JetSystem adapted_basis(const WebEquation& web, const SystemMatrix& m) {
    const int d = web.d();
    JetSystem js;
    js.d = d;
    js.coords = enumerate_coords(d - 2, d - 2);
    const CoordIndex index(js.coords);
    js.equations = prolonged_equations(m, js.coords, index);

    if (d == 4) {
        js.basis = printed_basis_4(web, m);
        check_in_kernel(js.equations, js.basis);
    } else {
        // eliminate highest jet order (then highest function index) first, so
        // free coordinates come out lowest order, lowest component
        std::vector<size_t> pivot_order(js.coords.size());
        for (size_t i = 0; i < pivot_order.size(); ++i) pivot_order[i] = i;
        std::stable_sort(pivot_order.begin(), pivot_order.end(), [&](size_t l, size_t r) {
            const JetCoord& cl = js.coords[l];
            const JetCoord& cr = js.coords[r];
            const int tl = cl.a + cl.b;
            const int tr = cr.a + cr.b;
            if (tl != tr) return tl > tr;
            if (cl.k != cr.k) return cl.k > cr.k;
            return cl.a > cr.a;
        });
        KernelResult kr = kernel_basis(js.equations, pivot_order);
        js.basis = std::move(kr.basis);
    }
    js.kernel_dim = js.basis.size();
    if (js.kernel_dim != web.pi_d())
        fail(ErrorKind::ProlongationFailure, "kernel dimension differs from pi_d");
    return js;
}

namespace {

// Spencer differential restricted to the flattened jet vector; drops one
// order.
RatVector spencer(const RatVector& v, const std::vector<JetCoord>& low,
                  const CoordIndex& index, Var var) {
    RatVector out;
    out.reserve(low.size());
    for (const JetCoord& c : low) {
        const RatFunc& val = v[index.at(c.k, c.a, c.b)];
        const size_t up =
            var == Var::x ? index.at(c.k, c.a + 1, c.b) : index.at(c.k, c.a, c.b + 1);
        out.push_back(val.derivative(var) - v[up]);
    }
    return out;
}

Form1Matrix lift_connection(const JetSystem& js, const CoordIndex& index) {
    const size_t n = js.basis.size();
    const std::vector<JetCoord> low = enumerate_coords(js.d - 2, js.d - 3);

    RatMatrix proj(low.size(), RatVector(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < low.size(); ++r)
            proj[r][j] = js.basis[j][index.at(low[r].k, low[r].a, low[r].b)];

    RatMatrix rhs;
    for (size_t i = 0; i < n; ++i) {
        rhs.push_back(spencer(js.basis[i], low, index, Var::x));
        rhs.push_back(spencer(js.basis[i], low, index, Var::y));
    }
    RatMatrix sols;
    try {
        sols = solve_overdetermined(std::move(proj), std::move(rhs));
    } catch (const WebError& e) {
        if (e.kind() == ErrorKind::SingularSystem)
            fail(ErrorKind::ProlongationFailure, "order-drop projection is not invertible on E");
        throw;
    }

    Form1Matrix gamma(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gamma.at(j, i) = Form1{sols[2 * i][j], sols[2 * i + 1][j]};
    return gamma;
}

bool lower_rows_zero(const Form2Matrix& k) {
    for (size_t i = 1; i < k.rows; ++i)
        for (size_t j = 0; j < k.cols; ++j)
            if (!k.at(i, j).is_zero()) return false;
    return true;
}

// Change of basis sending a generator of the curvature image to the first
// basis vector, so the curvature concentrates in the first row.
void concentrate_curvature(ConnectionData& conn) {
    const size_t n = conn.gamma.rows;
    RatMatrix ks(n, RatVector(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) ks[i][j] = conn.K.at(i, j).c;

    // generator of the image: the first nonzero column
    size_t c0 = n;
    for (size_t j = 0; j < n && c0 == n; ++j)
        for (size_t i = 0; i < n; ++i)
            if (!ks[i][j].is_zero()) {
                c0 = j;
                break;
            }
    if (c0 == n) return; // flat: nothing to do
    RatVector w(n);
    for (size_t i = 0; i < n; ++i) w[i] = ks[i][c0];
    size_t i0 = 0;
    while (w[i0].is_zero()) ++i0;
    for (size_t j = 0; j < n; ++j) { // the image must be a line
        const RatFunc lambda = ks[i0][j] / w[i0];
        for (size_t i = 0; i < n; ++i)
            if (ks[i][j] != lambda * w[i])
                fail(ErrorKind::AdaptedBasisViolation, "curvature image has rank above one");
    }

    RatMatrix p(n, RatVector(n));
    for (size_t i = 0; i < n; ++i) p[i][0] = w[i];
    size_t col = 1;
    for (size_t j = 0; j < n; ++j) {
        if (j == i0) continue;
        p[j][col++] = RatFunc(1);
    }
    const RatMatrix pinv = matrix_inverse(p);

    // gamma' = P^-1 (gamma P + dP)
    Form1Matrix gp(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t l = 0; l < n; ++l) {
            Form1 acc;
            for (size_t j = 0; j < n; ++j) acc = acc + p[j][l] * conn.gamma.at(i, j);
            if (l == 0) acc = acc + exterior_derivative(w[i]);
            gp.at(i, l) = acc;
        }
    }
    Form1Matrix gnew(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < n; ++l) {
            Form1 acc;
            for (size_t j = 0; j < n; ++j) acc = acc + pinv[i][j] * gp.at(j, l);
            gnew.at(i, l) = acc;
        }
    conn.gamma = std::move(gnew);
    conn.K = matrix_curvature(conn.gamma);

    // carry the basis along
    std::vector<RatVector> nb;
    RatVector first(conn.jets.basis[0].size());
    for (size_t j = 0; j < n; ++j)
        for (size_t c = 0; c < first.size(); ++c) first[c] += w[j] * conn.jets.basis[j][c];
    nb.push_back(std::move(first));
    for (size_t j = 0; j < n; ++j)
        if (j != i0) nb.push_back(conn.jets.basis[j]);
    conn.jets.basis = std::move(nb);
}

void assert_printed_gamma_4(const WebEquation& web, const AssociatedPair& pair0,
                            const Form1Matrix& gamma) {
    const Printed4 c = printed4(web, pair0);
    auto dx = [](const RatFunc& f) { return f.derivative(Var::x); };
    auto dy = [](const RatFunc& f) { return f.derivative(Var::y); };
    Form1Matrix expected(3, 3);
    expected.at(0, 0) = Form1{c.a1, c.a2 - c.v2};
    expected.at(0, 1) =
        Form1{dy(c.v4) + c.v4 * c.v2, c.v1 * c.v4 + dx(c.a2 - c.v2) - dy(c.a1 - c.v3)};
    expected.at(0, 2) = Form1{c.v4 * c.v1 - (dx(c.a2) - dy(c.a1)), c.v1 * c.v3 - dx(c.v1)};
    expected.at(1, 0) = Form1{RatFunc(-1), RatFunc()};
    expected.at(1, 1) = Form1{c.a1 - c.v3, c.a2 - c.v2};
    expected.at(1, 2) = Form1{RatFunc(), -c.v1};
    expected.at(2, 0) = Form1{RatFunc(), RatFunc(-1)};
    expected.at(2, 1) = Form1{c.v4, RatFunc()};
    expected.at(2, 2) = Form1{c.a1, c.a2};
    if (!(gamma == expected))
        fail(ErrorKind::Internal, "degree-4 connection disagrees with its closed form");
}

} // namespace

ConnectionData connection(const WebEquation& web) {
    const int d = web.d();
    const std::vector<AssociatedPair> pairs = all_associated_pairs(web);
    ConnectionData conn;
    conn.system = system_matrix(web, pairs);
    conn.jets = adapted_basis(web, conn.system);
    const CoordIndex index(conn.jets.coords);
    conn.gamma = lift_connection(conn.jets, index);
    conn.K = matrix_curvature(conn.gamma);

    if (d == 4) {
        assert_printed_gamma_4(web, pairs[0], conn.gamma);
        if (!lower_rows_zero(conn.K))
            fail(ErrorKind::AdaptedBasisViolation, "curvature not concentrated in the first row");
    } else if (!lower_rows_zero(conn.K)) {
        concentrate_curvature(conn);
        if (!lower_rows_zero(conn.K))
            fail(ErrorKind::AdaptedBasisViolation, "curvature not concentrated in the first row");
    }

    conn.k_row.clear();
    for (size_t j = 0; j < conn.K.cols; ++j) conn.k_row.push_back(conn.K.at(0, j).c);

    // the trace of K is an exterior derivative, so k_1 must match the
    // trace-only path
    if (trace(conn.K).c != trace_curvature(conn.system))
        fail(ErrorKind::Internal, "trace of the curvature disagrees with the closed-form trace");
    return conn;
}

RatFunc trace_curvature(const SystemMatrix& m) {
    const int d = m.d;
    Form1 tr;
    // tr gamma = sum_q q A_{d-q-1,q} dx + (d-1-q) A_{d-q,q} dy; checked for
    // d = 3, 4 against the printed traces and for d = 5, 6 against the sum of
    // the Blaschke curvatures of the extracted 3-webs.
    for (int q = 1; q <= d - 2; ++q) {
        const RatFunc qx(Rational(static_cast<long>(q)));
        const RatFunc qy(Rational(static_cast<long>(d - 1 - q)));
        tr = tr + Form1{qx * m.at(d - q - 1, q), qy * m.at(d - q, q)};
    }
    return exterior_derivative(tr).c;
}

RatFunc trace_curvature(const WebEquation& web) { return trace_curvature(system_matrix(web)); }

std::vector<RatFunc> normal_basis_curvature_4web(const WebEquation& web,
                                                 const ConnectionData& conn,
                                                 const LinearizationData& lin) {
    if (web.d() != 4) fail(ErrorKind::UnsupportedDegree, "normal basis is specific to degree 4");
    const AssociatedPair pair0 = associated_polynomials(web, 0);
    const RatFunc v2 = pair0.v(4, 2);
    const RatFunc v3 = pair0.v(4, 3);
    const RatFunc& k1 = conn.k_row[0];
    const RatFunc k1x = k1.derivative(Var::x);
    const RatFunc k1y = k1.derivative(Var::y);
    const RatFunc third = RatFunc(1) / RatFunc(3);
    if (conn.k_row[1] != third * (k1x + v3 * k1 + lin.L1) ||
        conn.k_row[2] != third * (k1y - v2 * k1 + lin.L2))
        fail(ErrorKind::Internal, "k_2/k_3 disagree with their closed forms");

    // P = [[1/3, -v3/3, v2/3], [0,1,0], [0,0,1]]; K -> P^-1 K P
    RatMatrix p = {{third, -third * v3, third * v2},
                   {RatFunc(), RatFunc(1), RatFunc()},
                   {RatFunc(), RatFunc(), RatFunc(1)}};
    const RatMatrix pinv = matrix_inverse(p);
    RatMatrix ks(3, RatVector(3));
    for (size_t j = 0; j < 3; ++j) ks[0][j] = conn.k_row[j];
    RatMatrix out(3, RatVector(3));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            RatFunc acc;
            for (size_t l = 0; l < 3; ++l)
                for (size_t r = 0; r < 3; ++r) acc += pinv[i][l] * ks[l][r] * p[r][j];
            out[i][j] = acc;
        }
    for (size_t j = 0; j < 3; ++j)
        if (!out[1][j].is_zero() || !out[2][j].is_zero())
            fail(ErrorKind::Internal, "normalized curvature has entries below the first row");
    if (out[0][0] != k1 || out[0][1] != k1x + lin.L1 || out[0][2] != k1y + lin.L2)
        fail(ErrorKind::Internal, "normalized curvature row disagrees with its closed form");
    return {out[0][0], out[0][1], out[0][2]};
}

std::vector<RatFunc> normal_basis_curvature_4web(const WebEquation& web) {
    return normal_basis_curvature_4web(web, connection(web), linearization_polynomial(web));
}

} // namespace webconn
