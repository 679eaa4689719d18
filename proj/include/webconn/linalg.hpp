#pragma once

#include <vector>

#include "webconn/mpoly.hpp"
#include "webconn/ratfunc.hpp"

namespace webconn {

using RatVector = std::vector<RatFunc>;
using RatMatrix = std::vector<std::vector<RatFunc>>;
using PolyMatrix = std::vector<std::vector<MPoly>>;

// Fraction-free (Bareiss) determinant of a polynomial matrix.
MPoly determinant_bareiss(PolyMatrix m);

RatFunc determinant(const RatMatrix& m);

// Exact solution of M sol = b for square M with det != 0; rows are cleared of
// denominators and eliminated fraction-free before back-substitution.
RatVector solve_linear(const RatMatrix& m, const RatVector& b);

// Rank over the rational-function field with exact zero tests.
size_t matrix_rank(const RatMatrix& m);

// Sylvester resultant of F and G with respect to p.
RatFunc resultant_p(const MPoly& f, const MPoly& g);

struct KernelResult {
    std::vector<RatVector> basis; // one vector per free column
    std::vector<size_t> free_cols;
};

// Nullspace of m, with pivot columns chosen greedily in the order given by
// pivot_order (a permutation of the column indices). Free columns keep the
// relative order in which they appear in pivot_order, reversed, so callers
// list the columns they want eliminated first at the front.
KernelResult kernel_basis(const RatMatrix& m, const std::vector<size_t>& pivot_order);

// Solves m sol = rhs for every column of rhs, where m is rows x cols with
// rows >= cols and full column rank; throws SingularSystem when the system is
// inconsistent or rank-deficient.
RatMatrix solve_overdetermined(const RatMatrix& m, const RatMatrix& rhs_columns);

// Exact inverse over the rational-function field; throws SingularSystem.
RatMatrix matrix_inverse(RatMatrix m);

} // namespace webconn
