#include "webconn/linalg.hpp"

#include <algorithm>

namespace webconn {

namespace {

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    return MPoly::divide_exact(a * b, MPoly::gcd(a, b));
}

// Clears denominators of a row in place, returning the common denominator.
MPoly clear_row(std::vector<MPoly>& out, const RatVector& row) {
    MPoly common(1);
    for (const RatFunc& e : row) common = poly_lcm(common, e.den());
    out.clear();
    out.reserve(row.size());
    for (const RatFunc& e : row)
        out.push_back(e.num() * MPoly::divide_exact(common, e.den()));
    return common;
}

// Divides a row of integer-coefficient polynomials by its content
// (polynomial and integer part) to keep entries at intrinsic size.
void remove_row_content(std::vector<MPoly>& row) {
    MPoly g;
    for (const MPoly& e : row) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e : MPoly::gcd(g, e);
        if (g.is_constant()) break;
    }
    if (!g.is_zero() && !g.is_constant())
        for (MPoly& e : row)
            if (!e.is_zero()) e = MPoly::divide_exact(e, g);
    mpz_class z = 0;
    for (const MPoly& e : row) {
        if (e.is_zero()) continue;
        mpz_class c = e.content().num();
        mpz_gcd(z.get_mpz_t(), z.get_mpz_t(), c.get_mpz_t());
        if (z == 1) break;
    }
    if (z > 1) {
        const Rational inv(mpq_class(mpz_class(1), z));
        for (MPoly& e : row) e *= inv;
    }
}

// In-place fraction-free reduced echelon form: pivots chosen by column order,
// eliminating in every other row via cross-multiplication followed by content
// removal. Row scaling is free, so this computes the same row space as field
// elimination without rational-function arithmetic.
void echelon_rows(std::vector<std::vector<MPoly>>& a, const std::vector<size_t>& col_order,
                  std::vector<long>& pivot_row, size_t& rank) {
    const size_t rows = a.size();
    for (auto& row : a) remove_row_content(row);
    pivot_row.assign(a.empty() ? 0 : a[0].size(), -1);
    rank = 0;
    for (size_t c : col_order) {
        size_t pr = rank;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[rank], a[pr]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c].is_zero()) continue;
            const MPoly g = MPoly::gcd(a[rank][c], a[i][c]);
            const MPoly fp = MPoly::divide_exact(a[rank][c], g);
            const MPoly fi = MPoly::divide_exact(a[i][c], g);
            for (size_t j = 0; j < a[i].size(); ++j)
                a[i][j] = fp * a[i][j] - fi * a[rank][j];
            a[i][c] = MPoly();
            remove_row_content(a[i]);
        }
        pivot_row[c] = static_cast<long>(rank);
        ++rank;
    }
}

} // namespace

MPoly determinant_bareiss(PolyMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::Dimension, "determinant of a non-square matrix");
    if (n == 0) return MPoly(1);
    int sign = 1;
    MPoly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = MPoly::divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

RatFunc determinant(const RatMatrix& m) {
    const size_t n = m.size();
    PolyMatrix cleared(n);
    RatFunc scale(1);
    for (size_t i = 0; i < n; ++i) {
        MPoly common = clear_row(cleared[i], m[i]);
        scale *= RatFunc(MPoly(1), common);
    }
    return scale * RatFunc(determinant_bareiss(std::move(cleared)));
}

RatVector solve_linear(const RatMatrix& m, const RatVector& b) {
    const size_t n = m.size();
    if (b.size() != n) fail(ErrorKind::Dimension, "rhs size mismatch");
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::Dimension, "solve_linear needs a square matrix");
    if (n == 0) return {};

    // augmented integer-polynomial matrix
    PolyMatrix a(n);
    for (size_t i = 0; i < n; ++i) {
        RatVector row = m[i];
        row.push_back(b[i]);
        clear_row(a[i], row);
    }

    MPoly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) fail(ErrorKind::SingularSystem, "singular linear system");
            std::swap(a[k], a[swap_row]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j)
                a[i][j] = MPoly::divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = MPoly();
        }
        prev = a[k][k];
    }
    if (a[n - 1][n - 1].is_zero()) fail(ErrorKind::SingularSystem, "singular linear system");

    RatVector sol(n);
    for (size_t i = n; i-- > 0;) {
        RatFunc acc(a[i][n]);
        for (size_t j = i + 1; j < n; ++j) acc -= RatFunc(a[i][j]) * sol[j];
        sol[i] = acc / RatFunc(a[i][i]);
    }
    return sol;
}

size_t matrix_rank(const RatMatrix& m) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    std::vector<std::vector<MPoly>> a(rows);
    for (size_t i = 0; i < rows; ++i) {
        clear_row(a[i], m[i]);
        remove_row_content(a[i]);
    }
    // below-pivot elimination only; the sparsest available pivot keeps the
    // cross-multiplied rows small
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t best = rows;
        for (size_t i = rank; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            if (best == rows || a[i][c].terms().size() < a[best][c].terms().size()) best = i;
        }
        if (best == rows) continue;
        std::swap(a[rank], a[best]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            const MPoly g = MPoly::gcd(a[rank][c], a[i][c]);
            const MPoly fp = MPoly::divide_exact(a[rank][c], g);
            const MPoly fi = MPoly::divide_exact(a[i][c], g);
            for (size_t j = c + 1; j < cols; ++j) a[i][j] = fp * a[i][j] - fi * a[rank][j];
            a[i][c] = MPoly();
            remove_row_content(a[i]);
        }
        ++rank;
    }
    return rank;
}

RatFunc resultant_p(const MPoly& f, const MPoly& g) {
    if (f.is_zero() || g.is_zero())
        fail(ErrorKind::DegenerateInput, "resultant of a zero polynomial");
    const int df = f.degree(Var::p);
    const int dg = g.degree(Var::p);
    if (df < 1 || dg < 1)
        fail(ErrorKind::DegenerateInput, "resultant requires positive degree in p");

    const std::vector<MPoly> fc = f.coefficients_wrt(Var::p);
    const std::vector<MPoly> gc = g.coefficients_wrt(Var::p);
    const size_t n = static_cast<size_t>(df + dg);
    PolyMatrix s(n, std::vector<MPoly>(n));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) s[i][i + j] = fc[static_cast<size_t>(df - j)];
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) s[dg + i][i + j] = gc[static_cast<size_t>(dg - j)];
    return RatFunc(determinant_bareiss(std::move(s)));
}

KernelResult kernel_basis(const RatMatrix& m, const std::vector<size_t>& pivot_order) {
    if (m.empty()) fail(ErrorKind::Dimension, "kernel of an empty matrix");
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    if (pivot_order.size() != cols) fail(ErrorKind::Dimension, "pivot order size mismatch");

    std::vector<std::vector<MPoly>> a(rows);
    for (size_t i = 0; i < rows; ++i) clear_row(a[i], m[i]);
    std::vector<long> pivot_row;
    size_t rank = 0;
    echelon_rows(a, pivot_order, pivot_row, rank);

    KernelResult out;
    for (size_t idx = pivot_order.size(); idx-- > 0;) {
        const size_t c = pivot_order[idx];
        if (pivot_row[c] < 0) out.free_cols.push_back(c);
    }
    for (size_t f : out.free_cols) {
        RatVector v(cols);
        v[f] = RatFunc(1);
        for (size_t c = 0; c < cols; ++c) {
            if (pivot_row[c] < 0) continue;
            const auto& row = a[static_cast<size_t>(pivot_row[c])];
            if (!row[f].is_zero()) v[c] = -RatFunc(row[f], row[c]);
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

RatMatrix solve_overdetermined(const RatMatrix& m, const RatMatrix& rhs_columns) {
    const size_t rows = m.size();
    if (rows == 0) fail(ErrorKind::Dimension, "empty system");
    const size_t cols = m[0].size();
    const size_t nrhs = rhs_columns.size();
    for (const auto& r : rhs_columns)
        if (r.size() != rows) fail(ErrorKind::Dimension, "rhs size mismatch");

    // augmented, denominator-cleared
    std::vector<std::vector<MPoly>> a(rows);
    for (size_t i = 0; i < rows; ++i) {
        RatVector row = m[i];
        for (size_t k = 0; k < nrhs; ++k) row.push_back(rhs_columns[k][i]);
        clear_row(a[i], row);
    }

    std::vector<size_t> col_order(cols);
    for (size_t c = 0; c < cols; ++c) col_order[c] = c;
    std::vector<long> pivot_row;
    size_t rank = 0;
    echelon_rows(a, col_order, pivot_row, rank);
    size_t solved = 0;
    for (size_t c = 0; c < cols; ++c)
        if (pivot_row[c] >= 0) ++solved;
    if (solved != cols) fail(ErrorKind::SingularSystem, "rank-deficient overdetermined system");
    for (size_t i = rank; i < rows; ++i)
        for (size_t k = 0; k < nrhs; ++k)
            if (!a[i][cols + k].is_zero())
                fail(ErrorKind::SingularSystem, "inconsistent overdetermined system");

    RatMatrix sols(nrhs, RatVector(cols));
    for (size_t c = 0; c < cols; ++c) {
        const auto& row = a[static_cast<size_t>(pivot_row[c])];
        for (size_t k = 0; k < nrhs; ++k)
            if (!row[cols + k].is_zero()) sols[k][c] = RatFunc(row[cols + k], row[c]);
    }
    return sols;
}

RatMatrix matrix_inverse(RatMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::Dimension, "inverse of a non-square matrix");
    RatMatrix inv(n, RatVector(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = RatFunc(1);
    for (size_t c = 0; c < n; ++c) {
        size_t pr = c;
        while (pr < n && m[pr][c].is_zero()) ++pr;
        if (pr == n) fail(ErrorKind::SingularSystem, "singular matrix has no inverse");
        std::swap(m[c], m[pr]);
        std::swap(inv[c], inv[pr]);
        const RatFunc piv = m[c][c].inv();
        for (size_t j = 0; j < n; ++j) {
            m[c][j] = piv * m[c][j];
            inv[c][j] = piv * inv[c][j];
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            const RatFunc f = m[i][c];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace webconn
