#pragma once

#include <array>

namespace webconn::d4 {

// Division-free construction of the adapted basis, connection and curvature
// for degree-4 webs, parametrized over the scalar ring so the same formulas
// run both on rational functions and on free differential symbols.
//
// Scalar requirements: S(long), default zero, + - *, unary -, is_zero().
// Diff provides d.x(S) and d.y(S).

template <typename S>
struct SystemEntries { // A[i][j] of the 3x2 system matrix, 0-based
    std::array<std::array<S, 2>, 3> a{};
};

// 2-jet of a pair (b_3, b_4); columns (z, p, q, r, s, t) =
// (value, dx, dy, dxx, dxy, dyy); row 0 is b_3, row 1 is b_4.
template <typename S>
using Jet = std::array<std::array<S, 6>, 2>;

template <typename S>
using LowJet = std::array<std::array<S, 3>, 2>; // 1-jet part (z, p, q)

template <typename S>
using Mat3 = std::array<std::array<S, 3>, 3>;

template <typename S>
struct Gamma { // gamma = X dx + Y dy
    Mat3<S> x{};
    Mat3<S> y{};
};

template <typename S, typename Diff>
std::array<Jet<S>, 3> adapted_basis(const SystemEntries<S>& m, Diff d) {
    const S& A11 = m.a[0][0];
    const S& A12 = m.a[0][1];
    const S& A21 = m.a[1][0];
    const S& A22 = m.a[1][1];
    const S& A31 = m.a[2][0];
    const S& A32 = m.a[2][1];
    std::array<Jet<S>, 3> e;
    e[0] = Jet<S>{{{S(0), S(-1), S(0), A21 + A12, A31, -A32},
                   {S(0), S(0), S(1), A11, -A12, -A22 - A31}}};
    e[1] = Jet<S>{
        {{S(-1), A21, A31, -d.y(A11) + d.x(A21) - A21 * A21 - A11 * (A22 - A31),
          -A31 * A21 - A32 * A11 + d.x(A31), -A31 * A31 + d.y(A31)},
         {S(0), A11, S(0), -A11 * (A21 + A12) + d.x(A11), -A11 * A31 + d.y(A11),
          -d.x(A31) + d.y(A21) + A32 * A11}}};
    e[2] = Jet<S>{
        {{S(0), S(0), -A32, d.y(A12) - d.x(A22) - A11 * A32, A32 * A12 - d.x(A32),
          A32 * (A31 + A22) - d.y(A32)},
         {S(1), -A12, -A22, A12 * A12 - d.x(A12), A11 * A32 + A12 * A22 - d.y(A12),
          A32 * (A21 - A12) + A22 * A22 + d.x(A32) - d.y(A22)}}};
    return e;
}

// Images of the jet under the prolonged operator p_1; all six must vanish on
// the kernel.
template <typename S>
std::array<S, 9> kernel_residual(const SystemEntries<S>& m, const Jet<S>& e,
                                 const SystemEntries<S>& mx, const SystemEntries<S>& my) {
    auto row = [&](const SystemEntries<S>& a, const S& lead0, const S& lead1, int i,
                   const S& z3, const S& z4) {
        return lead0 + lead1 + a.a[i][0] * z3 + a.a[i][1] * z4;
    };
    const auto& b3 = e[0];
    const auto& b4 = e[1];
    return {
        // p_0 rows on the 1-jet part
        row(m, b4[1], S(0), 0, b3[0], b4[0]),
        row(m, b3[1], b4[2], 1, b3[0], b4[0]),
        row(m, b3[2], S(0), 2, b3[0], b4[0]),
        // x-prolongation
        row(m, b4[3], S(0), 0, b3[1], b4[1]) + mx.a[0][0] * b3[0] + mx.a[0][1] * b4[0],
        row(m, b3[3], b4[4], 1, b3[1], b4[1]) + mx.a[1][0] * b3[0] + mx.a[1][1] * b4[0],
        row(m, b3[4], S(0), 2, b3[1], b4[1]) + mx.a[2][0] * b3[0] + mx.a[2][1] * b4[0],
        // y-prolongation
        row(m, b4[4], S(0), 0, b3[2], b4[2]) + my.a[0][0] * b3[0] + my.a[0][1] * b4[0],
        row(m, b3[4], b4[5], 1, b3[2], b4[2]) + my.a[1][0] * b3[0] + my.a[1][1] * b4[0],
        row(m, b3[5], S(0), 2, b3[2], b4[2]) + my.a[2][0] * b3[0] + my.a[2][1] * b4[0],
    };
}

template <typename S, typename Diff>
LowJet<S> spencer_x(const Jet<S>& e, Diff d) {
    LowJet<S> out;
    for (int k = 0; k < 2; ++k) {
        out[k][0] = d.x(e[k][0]) - e[k][1];
        out[k][1] = d.x(e[k][1]) - e[k][3];
        out[k][2] = d.x(e[k][2]) - e[k][4];
    }
    return out;
}

template <typename S, typename Diff>
LowJet<S> spencer_y(const Jet<S>& e, Diff d) {
    LowJet<S> out;
    for (int k = 0; k < 2; ++k) {
        out[k][0] = d.y(e[k][0]) - e[k][2];
        out[k][1] = d.y(e[k][1]) - e[k][4];
        out[k][2] = d.y(e[k][2]) - e[k][5];
    }
    return out;
}

template <typename S>
struct Lift {
    std::array<S, 3> c{};        // coordinates in the basis images
    std::array<S, 3> residual{}; // redundant components; must vanish
};

// Solve De = c_1 pi(e_1) + c_2 pi(e_2) + c_3 pi(e_3) against the 1-jet
// projections of the adapted basis; three components determine c, the other
// three are consistency residuals.
template <typename S>
Lift<S> lift(const SystemEntries<S>& m, const LowJet<S>& de) {
    const S& A11 = m.a[0][0];
    const S& A12 = m.a[0][1];
    const S& A21 = m.a[1][0];
    const S& A22 = m.a[1][1];
    const S& A31 = m.a[2][0];
    const S& A32 = m.a[2][1];
    Lift<S> out;
    out.c[1] = -de[0][0];
    out.c[2] = de[1][0];
    out.c[0] = A21 * out.c[1] - de[0][1];
    out.residual[0] = A31 * out.c[1] - A32 * out.c[2] - de[0][2];
    out.residual[1] = A11 * out.c[1] - A12 * out.c[2] - de[1][1];
    out.residual[2] = out.c[0] - A22 * out.c[2] - de[1][2];
    return out;
}

template <typename S>
struct ConnectionResult {
    std::array<Jet<S>, 3> basis;
    Gamma<S> gamma;
    std::array<std::array<S, 3>, 6> lift_residuals{}; // x then y lift per basis vector
    bool residuals_zero() const {
        for (const auto& block : lift_residuals)
            for (const auto& r : block)
                if (!r.is_zero()) return false;
        return true;
    }
};

template <typename S, typename Diff>
ConnectionResult<S> connection(const SystemEntries<S>& m, Diff d) {
    ConnectionResult<S> out;
    out.basis = adapted_basis(m, d);
    for (int i = 0; i < 3; ++i) {
        const Lift<S> lx = lift(m, spencer_x(out.basis[i], d));
        const Lift<S> ly = lift(m, spencer_y(out.basis[i], d));
        for (int j = 0; j < 3; ++j) {
            out.gamma.x[j][i] = lx.c[j];
            out.gamma.y[j][i] = ly.c[j];
        }
        out.lift_residuals[static_cast<size_t>(2 * i)] = lx.residual;
        out.lift_residuals[static_cast<size_t>(2 * i + 1)] = ly.residual;
    }
    return out;
}

// dx^dy coefficient of d(gamma) + gamma ^ gamma
template <typename S, typename Diff>
Mat3<S> curvature(const Gamma<S>& g, Diff d) {
    Mat3<S> k{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            S acc = d.x(g.y[i][j]) - d.y(g.x[i][j]);
            for (int l = 0; l < 3; ++l) acc = acc + g.x[i][l] * g.y[l][j] - g.y[i][l] * g.x[l][j];
            k[i][j] = acc;
        }
    return k;
}

} // namespace webconn::d4
