#include "webconn/assoc.hpp"

namespace webconn {

namespace {

// Power sums of the slopes from the coefficients via Newton's identities;
// returns S_0 .. S_max with S_0 = d.
std::vector<RatFunc> power_sums(const WebEquation& web, int max_power) {
    const int d = web.d();
    std::vector<RatFunc> e(static_cast<size_t>(d) + 1); // elementary symmetric
    e[0] = RatFunc(1);
    for (int j = 1; j <= d; ++j) {
        RatFunc sign((j % 2 == 0) ? 1 : -1);
        e[static_cast<size_t>(j)] = sign * web.a(static_cast<size_t>(j)) / web.a(0);
    }
    std::vector<RatFunc> s(static_cast<size_t>(max_power) + 1);
    s[0] = RatFunc(Rational(static_cast<long>(d)));
    for (int m = 1; m <= max_power; ++m) {
        RatFunc acc;
        for (int j = 1; j < m; ++j) {
            RatFunc sign((j % 2 == 1) ? 1 : -1);
            if (j <= d) acc += sign * e[static_cast<size_t>(j)] * s[static_cast<size_t>(m - j)];
        }
        if (m <= d) {
            RatFunc sign((m % 2 == 1) ? 1 : -1);
            acc += sign * RatFunc(Rational(static_cast<long>(m))) * e[static_cast<size_t>(m)];
        }
        s[static_cast<size_t>(m)] = acc;
    }
    return s;
}

} // namespace

AssociatedPair associated_polynomials(const WebEquation& web, int order) {
    const int d = web.d();
    if (order < 0 || order > d - 3)
        fail(ErrorKind::Degree, "associated-polynomial order out of range");

    const size_t n = static_cast<size_t>(2 * d - 1);
    RatMatrix m(n, RatVector(n));
    RatVector rhs(n);

    // Row for the coefficient of p^q; unknowns (u_2..u_d, v_1..v_d).
    auto row_of = [&](int q) { return static_cast<size_t>(2 * d - 2 - q); };
    for (int q = 0; q <= 2 * d - 2; ++q) {
        const size_t r = row_of(q);
        for (int j = 2; j <= d; ++j) { // u_j multiplies p^(d-j) F
            const int i = 2 * d - j - q;
            if (i >= 0 && i <= d) m[r][static_cast<size_t>(j - 2)] = web.a(static_cast<size_t>(i));
        }
        for (int j = 1; j <= d; ++j) { // v_j multiplies p^(d-j) dF/dp
            const int i = 2 * d - j - 1 - q;
            if (i >= 0 && i < d)
                m[r][static_cast<size_t>(d - 1 + j - 1)] =
                    RatFunc(Rational(static_cast<long>(d - i))) * web.a(static_cast<size_t>(i));
        }
        // p^order (dF/dx + p dF/dy), coefficient of p^q
        RatFunc v;
        const int ix = d + order - q;
        if (ix >= 0 && ix <= d) v += web.a(static_cast<size_t>(ix)).derivative(Var::x);
        const int iy = d + 1 + order - q;
        if (iy >= 0 && iy <= d) v += web.a(static_cast<size_t>(iy)).derivative(Var::y);
        rhs[r] = v;
    }

    RatVector sol;
    try {
        sol = solve_linear(m, rhs);
    } catch (const WebError& e) {
        if (e.kind() == ErrorKind::SingularSystem)
            fail(ErrorKind::NonReducedWeb, "Sylvester system singular: web is not reduced");
        throw;
    }

    AssociatedPair pair;
    pair.order = order;
    std::vector<RatFunc> uc(static_cast<size_t>(d) - 1);
    for (int j = 2; j <= d; ++j) uc[static_cast<size_t>(d - j)] = sol[static_cast<size_t>(j - 2)];
    pair.U = PPoly(std::move(uc));
    std::vector<RatFunc> vc(static_cast<size_t>(d));
    for (int j = 1; j <= d; ++j) vc[static_cast<size_t>(d - j)] = sol[static_cast<size_t>(d - 1 + j - 1)];
    pair.V = PPoly(std::move(vc));

    // defining identity, checked before returning
    PPoly f = web.F();
    PPoly lhs = PPoly::monomial(static_cast<unsigned>(order), RatFunc(1)) *
                (f.derivative(Var::x) + PPoly::p() * f.derivative(Var::y));
    PPoly residual = lhs - (pair.U * f + pair.V * web.F_p());
    if (!residual.is_zero())
        fail(ErrorKind::Internal, "associated-polynomial identity violated");
    return pair;
}

std::vector<AssociatedPair> all_associated_pairs(const WebEquation& web) {
    std::vector<AssociatedPair> pairs;
    for (int i = 0; i <= web.d() - 3; ++i) pairs.push_back(associated_polynomials(web, i));
    return pairs;
}

FundamentalForm fundamental_form(const WebEquation& web, const AssociatedPair& order0) {
    const int d = web.d();
    const RatFunc a1 = -(order0.u(d, d) + order0.v(d, d - 1));
    const RatFunc a2 = -(order0.u(d, d - 1) + RatFunc(2) * order0.v(d, d - 2));

    // Cross-check against the power-sum expression of alpha (Newton's
    // identities on the coefficients, never on roots).
    std::vector<RatFunc> s = power_sums(web, d - 2);
    const RatFunc a0inv = web.a(0).inv();
    RatFunc check1 = -web.a(0).derivative(Var::x) * a0inv -
                     (web.a(1) * a0inv).derivative(Var::y);
    for (int j = 1; j <= d - 2; ++j)
        check1 += order0.v(d, j) * s[static_cast<size_t>(d - 1 - j)];
    check1 += RatFunc(Rational(static_cast<long>(d - 1))) * order0.v(d, d - 1);
    RatFunc check2 = -web.a(0).derivative(Var::y) * a0inv;
    for (int j = 1; j <= d - 3; ++j)
        check2 += order0.v(d, j) * s[static_cast<size_t>(d - 2 - j)];
    check2 += RatFunc(Rational(static_cast<long>(d - 2))) * order0.v(d, d - 2);
    if (a1 != check1 || a2 != check2)
        fail(ErrorKind::Internal, "fundamental form power-sum identity violated");

    return FundamentalForm{Form1{a1, a2}};
}

FundamentalForm fundamental_form(const WebEquation& web) {
    return fundamental_form(web, associated_polynomials(web, 0));
}

LinearizationData linearization_polynomial(const WebEquation& web, const AssociatedPair& order0) {
    const int d = web.d();
    LinearizationData out;
    out.P = -order0.V;
    out.effective_degree = std::max(out.P.degree(), 0);
    if (d >= 4) {
        // The coefficients feeding the L-system are those of V = -P; with
        // the opposite sign the k_2/k_3 curvature identities fail.
        const RatFunc ld = order0.V.coeff(0);
        const RatFunc ld1 = order0.V.coeff(1);
        const RatFunc ld2 = order0.V.coeff(2);
        const RatFunc ld3 = order0.V.coeff(3);
        auto dx = [](const RatFunc& f) { return f.derivative(Var::x); };
        auto dy = [](const RatFunc& f) { return f.derivative(Var::y); };
        const RatFunc three(3);
        const RatFunc w1 = dx(ld2) - RatFunc(2) * dy(ld1);
        out.L1 = -dx(w1) - ld1 * w1 - three * dy(dy(ld)) - three * dy(ld2 * ld) +
                 three * dx(ld * ld3) + three * ld * dx(ld3);
        const RatFunc w2 = RatFunc(2) * dx(ld2) - dy(ld1);
        out.L2 = dy(w2) - ld2 * w2 - three * dx(dx(ld3)) + three * dx(ld1 * ld3) -
                 three * dy(ld * ld3) - three * ld3 * dy(ld);
    }
    return out;
}

LinearizationData linearization_polynomial(const WebEquation& web) {
    return linearization_polynomial(web, associated_polynomials(web, 0));
}

Classification classify(const WebEquation& web) {
    const AssociatedPair pair = associated_polynomials(web, 0);
    Classification c;
    c.is_linear = pair.V.is_zero();
    c.is_algebraic =
        c.is_linear && (web.a(1) / web.a(0)).derivative(Var::y).derivative(Var::y).is_zero();
    const LinearizationData lin = linearization_polynomial(web, pair);
    if (web.d() == 3)
        c.linearizable_candidate = true;
    else
        c.linearizable_candidate =
            lin.effective_degree <= 3 && lin.L1.is_zero() && lin.L2.is_zero();
    return c;
}

InvarianceResiduals invariance_check(const WebEquation& web, const RatFunc& g) {
    const WebEquation rescaled = web.rescale(g);
    InvarianceResiduals out;
    const PPoly shift_base =
        PPoly(g.derivative(Var::x) / g) + PPoly::p() * PPoly(g.derivative(Var::y) / g);
    AssociatedPair pair0;
    AssociatedPair pair0g;
    for (int i = 0; i <= web.d() - 3; ++i) {
        const AssociatedPair a = associated_polynomials(web, i);
        const AssociatedPair b = associated_polynomials(rescaled, i);
        if (i == 0) {
            pair0 = a;
            pair0g = b;
        }
        out.v_residual.push_back(b.V - a.V);
        out.u_residual.push_back(
            b.U - a.U - PPoly::monomial(static_cast<unsigned>(i), RatFunc(1)) * shift_base);
    }
    const Form1 alpha = fundamental_form(web, pair0).alpha;
    const Form1 alpha_g = fundamental_form(rescaled, pair0g).alpha;
    out.dalpha_residual = exterior_derivative(alpha_g) - exterior_derivative(alpha);
    return out;
}

} // namespace webconn
