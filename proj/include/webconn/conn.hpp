#pragma once

#include "webconn/assoc.hpp"

namespace webconn {

// Coefficient matrix of the first-order system M(d): row i (1..d-1) reads
// dx(b_{d+1-i}) + dy(b_{d+2-i}) + sum_j A[i][j] b_{j+2} = 0 on the unknowns
// b_3 .. b_d (b outside that range is absent). Stored 0-based.
struct SystemMatrix {
    int d = 0;
    RatMatrix A; // (d-1) x (d-2)

    const RatFunc& at(int i, int j) const { // 1-based, as printed
        return A[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    }
};

// Staircase shape of the closedness conditions: per row, which b_j carries
// the dx-derivative and which the dy-derivative (0 when absent), plus the
// zero-order coefficients.
struct ClosednessResidual {
    struct Row {
        int dx_symbol = 0;
        int dy_symbol = 0;
        RatVector a_row;
    };
    std::vector<Row> rows;

    bool staircase_ok(int d) const;
};

// Jet coordinate of the unknown b_{k+3}: the value of dx^a dy^b (b_{k+3}).
struct JetCoord {
    int k = 0;
    int a = 0;
    int b = 0;
};

struct JetSystem {
    int d = 0;
    std::vector<JetCoord> coords;    // flattening order of the jet space
    RatMatrix equations;             // prolonged operator, one row per equation
    std::vector<RatVector> basis;    // kernel basis in the coords flattening
    size_t kernel_dim = 0;
};

struct ConnectionData {
    SystemMatrix system;
    JetSystem jets;
    Form1Matrix gamma;
    Form2Matrix K;
    std::vector<RatFunc> k_row; // first row of K (dx^dy coefficients)
};

SystemMatrix system_matrix(const WebEquation& web, const std::vector<AssociatedPair>& pairs);
SystemMatrix system_matrix(const WebEquation& web);

ClosednessResidual closedness_residual(const SystemMatrix& m);

// Basis of E = Ker of the prolonged operator; echelonized with free jet
// coordinates lowest order first, except d=4 where the explicitly adapted
// basis is used.
JetSystem adapted_basis(const WebEquation& web, const SystemMatrix& m);

// Full construction: basis, Spencer differential, lift, curvature, and the
// change of basis concentrating the curvature in the first row.
ConnectionData connection(const WebEquation& web);

// k_1 from the closed-form trace of gamma; needs only the system matrix.
RatFunc trace_curvature(const SystemMatrix& m);
RatFunc trace_curvature(const WebEquation& web);

// (k_1, dx(k_1)+L_1, dy(k_1)+L_2) after the degree-4 normalizing change of
// basis; asserts the printed relations between k_2, k_3 and L_1, L_2.
std::vector<RatFunc> normal_basis_curvature_4web(const WebEquation& web,
                                                 const ConnectionData& conn,
                                                 const LinearizationData& lin);
std::vector<RatFunc> normal_basis_curvature_4web(const WebEquation& web);

} // namespace webconn
