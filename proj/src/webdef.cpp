#include "webconn/webdef.hpp"

namespace webconn {

namespace {

// Sylvester determinant of F and dF/dp over the rational-function field.
RatFunc rational_resultant(const PPoly& f, const PPoly& g) {
    const int df = f.degree();
    const int dg = g.degree();
    if (df < 1 || dg < 1)
        fail(ErrorKind::DegenerateInput, "resultant requires positive degree in p");
    const size_t n = static_cast<size_t>(df + dg);
    RatMatrix s(n, RatVector(n));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f.coeff(static_cast<size_t>(df - j));
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) s[static_cast<size_t>(dg + i)][static_cast<size_t>(i + j)] = g.coeff(static_cast<size_t>(dg - j));
    return determinant(s);
}

} // namespace

WebEquation WebEquation::from_coefficients(int d, std::vector<RatFunc> coeffs, BasePoint base) {
    if (d < 3) fail(ErrorKind::Degree, "web degree must be at least 3");
    if (coeffs.size() != static_cast<size_t>(d) + 1)
        fail(ErrorKind::Dimension, "expected d+1 coefficients");
    if (coeffs[0].is_zero())
        fail(ErrorKind::LeadingCoefficient, "leading coefficient a_0 vanishes identically");

    WebEquation w;
    w.d_ = d;
    w.coeffs_ = std::move(coeffs);
    w.base_ = base;

    PPoly f = w.F();
    PPoly fp = w.F_p();
    if (fp.degree() < 1)
        fail(ErrorKind::NonReducedWeb, "dF/dp is constant in p");
    w.discriminant_ = rational_resultant(f, fp);
    if (w.discriminant_.is_zero())
        fail(ErrorKind::NonReducedWeb, "p-resultant of F and dF/dp vanishes identically");
    w.base_singular_ = !w.discriminant_.invertible_at(base.x, base.y);
    return w;
}

PPoly WebEquation::F() const {
    std::vector<RatFunc> c(static_cast<size_t>(d_) + 1);
    for (int i = 0; i <= d_; ++i) c[static_cast<size_t>(d_ - i)] = coeffs_[static_cast<size_t>(i)];
    return PPoly(std::move(c));
}

PPoly WebEquation::F_p() const { return F().derivative_p(); }

WebEquation WebEquation::rescale(const RatFunc& g) const {
    if (g.is_zero()) fail(ErrorKind::NonInvertibleRescale, "rescale by zero");
    if (!g.invertible_at(base_.x, base_.y))
        fail(ErrorKind::NonInvertibleRescale, "rescale factor not invertible at the base point");
    std::vector<RatFunc> c = coeffs_;
    for (RatFunc& e : c) e = g * e;
    return from_coefficients(d_, std::move(c), base_);
}

SlopeWeb from_slopes(std::vector<RatFunc> slopes, BasePoint base) {
    const int d = static_cast<int>(slopes.size());
    if (d < 3) fail(ErrorKind::Degree, "need at least 3 slopes");
    for (size_t i = 0; i < slopes.size(); ++i)
        for (size_t j = i + 1; j < slopes.size(); ++j)
            if (slopes[i] == slopes[j]) fail(ErrorKind::DuplicateSlope, "identical slopes");

    PPoly f(RatFunc(1));
    for (const RatFunc& s : slopes) f = f * (PPoly::p() - PPoly(s));

    // Clear denominators so the stored presentation has polynomial
    // coefficients (an O*-rescale).
    MPoly common(1);
    for (int k = 0; k <= f.degree(); ++k) {
        const MPoly& den = f.coeff(static_cast<size_t>(k)).den();
        common = MPoly::divide_exact(common * den, MPoly::gcd(common, den));
    }
    std::vector<RatFunc> coeffs(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const RatFunc& c = f.coeff(static_cast<size_t>(d - i));
        coeffs[static_cast<size_t>(i)] =
            RatFunc(c.num() * MPoly::divide_exact(common, c.den()));
    }

    return SlopeWeb{WebEquation::from_coefficients(d, std::move(coeffs), base),
                    std::move(slopes)};
}

} // namespace webconn
