#pragma once

#include <array>

#include "webconn/conn.hpp"

namespace webconn {

struct ExtractionReport {
    std::vector<std::array<size_t, 3>> triples; // 0-based slope indices
    std::vector<Form2> blaschke;                // one d(alpha) per extracted 3-web
    Form2 sum;
    Form2 k1_form;
    Form2 residual; // k1_form - sum; must vanish
};

// Residuals of the printed relations between an extracted 3-web's invariants
// and the parent 4-web's.
struct ExtractedRelations4 {
    size_t omitted = 0; // 0-based index of the distinguished slope p_k
    RatFunc a2_residual;
    RatFunc a1_residual;
    RatFunc v_residual;

    bool all_zero() const {
        return a2_residual.is_zero() && a1_residual.is_zero() && v_residual.is_zero();
    }
};

SlopeWeb extract_subweb(const SlopeWeb& sw, const std::vector<size_t>& subset);

// d(alpha) of a 3-web; the Blaschke curvature.
Form2 blaschke_curvature(const SlopeWeb& sw3);

// tr K = sum of the Blaschke curvatures of all C(d,3) extracted 3-webs,
// computed through two independent paths.
ExtractionReport trace_formula_check(const SlopeWeb& sw);

// Checks, for a 4-web and the 3-web extracted by omitting slope k:
// A_2^k = A_2 - v_2 - v_1 p_k,
// A_1^k = -dy(p_k) + A_1 - v_3 - v_2 p_k - v_1 p_k^2,
// -V(p_k) = dx(p_k) + p_k dy(p_k).
ExtractedRelations4 extracted_relations_4web(const SlopeWeb& sw, size_t k);

bool is_hexagonal(const SlopeWeb& sw);

} // namespace webconn
