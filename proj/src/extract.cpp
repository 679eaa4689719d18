#include "webconn/extract.hpp"

namespace webconn {

SlopeWeb extract_subweb(const SlopeWeb& sw, const std::vector<size_t>& subset) {
    if (subset.size() < 3) fail(ErrorKind::Degree, "extracted web needs at least 3 slopes");
    std::vector<RatFunc> slopes;
    for (size_t i : subset) {
        if (i >= sw.slopes.size()) fail(ErrorKind::Dimension, "slope index out of range");
        slopes.push_back(sw.slopes[i]);
    }
    return from_slopes(std::move(slopes), sw.web.base_point());
}

Form2 blaschke_curvature(const SlopeWeb& sw3) {
    if (sw3.web.d() != 3) fail(ErrorKind::Degree, "Blaschke curvature is specific to 3-webs");
    return exterior_derivative(fundamental_form(sw3.web).alpha);
}

ExtractionReport trace_formula_check(const SlopeWeb& sw) {
    const size_t d = sw.slopes.size();
    ExtractionReport report;
    report.k1_form = Form2{trace_curvature(sw.web)};
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            for (size_t k = j + 1; k < d; ++k) {
                report.triples.push_back({i, j, k});
                report.blaschke.push_back(blaschke_curvature(extract_subweb(sw, {i, j, k})));
                report.sum = report.sum + report.blaschke.back();
            }
    report.residual = report.k1_form - report.sum;
    return report;
}

ExtractedRelations4 extracted_relations_4web(const SlopeWeb& sw, size_t k) {
    if (sw.web.d() != 4) fail(ErrorKind::Degree, "extracted relations are specific to 4-webs");
    if (k >= sw.slopes.size()) fail(ErrorKind::Dimension, "slope index out of range");

    const RatFunc& pk = sw.slopes[k];
    // the printed relations hold for the quotient presentation F/(p - p_k),
    // not for an arbitrary rescale of the extracted web (alpha is not an
    // O*-invariant); divide synthetically
    std::vector<RatFunc> quot(4);
    quot[0] = sw.web.a(0);
    for (size_t i = 1; i < 4; ++i) quot[i] = sw.web.a(i) + pk * quot[i - 1];
    const WebEquation sub =
        WebEquation::from_coefficients(3, std::move(quot), sw.web.base_point());

    const AssociatedPair parent0 = associated_polynomials(sw.web, 0);
    const Form1 alpha = fundamental_form(sw.web, parent0).alpha;
    const Form1 alpha_k = fundamental_form(sub).alpha;
    const RatFunc v1 = parent0.v(4, 1);
    const RatFunc v2 = parent0.v(4, 2);
    const RatFunc v3 = parent0.v(4, 3);

    ExtractedRelations4 out;
    out.omitted = k;
    out.a2_residual = alpha_k.cy - (alpha.cy - v2 - v1 * pk);
    out.a1_residual =
        alpha_k.cx - (-pk.derivative(Var::y) + alpha.cx - v3 - v2 * pk - v1 * pk * pk);
    out.v_residual =
        -parent0.V.eval(pk) - (pk.derivative(Var::x) + pk * pk.derivative(Var::y));
    return out;
}

bool is_hexagonal(const SlopeWeb& sw) {
    const size_t d = sw.slopes.size();
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            for (size_t k = j + 1; k < d; ++k)
                if (!blaschke_curvature(extract_subweb(sw, {i, j, k})).is_zero()) return false;
    return true;
}

} // namespace webconn
