#pragma once

#include "webconn/forms.hpp"
#include "webconn/webdef.hpp"

namespace webconn {

// The unique pair with p^i (dF/dx + p dF/dy) = U F + V dF/dp,
// deg_p U <= d-2, deg_p V <= d-1.
struct AssociatedPair {
    int order = 0;
    PPoly U;
    PPoly V;

    // u_j and v_j in the indexing U = u_2 p^(d-2) + ... + u_d,
    // V = v_1 p^(d-1) + ... + v_d.
    RatFunc u(int d, int j) const { return U.coeff(static_cast<size_t>(d - j)); }
    RatFunc v(int d, int j) const { return V.coeff(static_cast<size_t>(d - j)); }
};

struct FundamentalForm {
    Form1 alpha;
};

struct LinearizationData {
    PPoly P; // = -V
    int effective_degree = 0;
    RatFunc L1;
    RatFunc L2;
};

struct Classification {
    bool is_linear = false;
    bool is_algebraic = false;
    bool linearizable_candidate = false;
};

struct InvarianceResiduals {
    std::vector<PPoly> v_residual;      // V_i(gF) - V_i(F)
    std::vector<PPoly> u_residual;      // U_i(gF) - U_i(F) - p^i (dg/dx + p dg/dy)/g
    Form2 dalpha_residual;

    bool all_zero() const {
        for (const auto& r : v_residual)
            if (!r.is_zero()) return false;
        for (const auto& r : u_residual)
            if (!r.is_zero()) return false;
        return dalpha_residual.is_zero();
    }
};

AssociatedPair associated_polynomials(const WebEquation& web, int order);

// Orders 0 .. d-3.
std::vector<AssociatedPair> all_associated_pairs(const WebEquation& web);

FundamentalForm fundamental_form(const WebEquation& web, const AssociatedPair& order0);
FundamentalForm fundamental_form(const WebEquation& web);

LinearizationData linearization_polynomial(const WebEquation& web, const AssociatedPair& order0);
LinearizationData linearization_polynomial(const WebEquation& web);

Classification classify(const WebEquation& web);

InvarianceResiduals invariance_check(const WebEquation& web, const RatFunc& g);

} // namespace webconn
