#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "webconn/linalg.hpp"
#include "webconn/ppoly.hpp"

namespace webconn {

struct BasePoint {
    Rational x;
    Rational y;
};

// Degree-d presentation a_0 p^d + a_1 p^(d-1) + ... + a_d = 0.
// coeffs[i] is a_i (so it multiplies p^(d-i)).
class WebEquation {
  public:
    static WebEquation from_coefficients(int d, std::vector<RatFunc> coeffs,
                                         BasePoint base = {Rational(0), Rational(0)});

    int d() const { return d_; }
    size_t pi_d() const { return static_cast<size_t>((d_ - 1) * (d_ - 2)) / 2; }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    const RatFunc& a(size_t i) const { return coeffs_[i]; }
    const BasePoint& base_point() const { return base_; }
    const RatFunc& discriminant() const { return discriminant_; }
    bool base_point_singular() const { return base_singular_; }

    PPoly F() const;   // the presentation as a p-polynomial
    PPoly F_p() const; // its p-derivative

    WebEquation rescale(const RatFunc& g) const;

  private:
    WebEquation() = default;

    int d_ = 0;
    std::vector<RatFunc> coeffs_;
    BasePoint base_;
    RatFunc discriminant_;
    bool base_singular_ = false; // warning flag, not an error
};

struct SlopeWeb {
    WebEquation web;
    std::vector<RatFunc> slopes;
};

// Builds the presentation prod (p - p_i) = 0 and clears denominators.
SlopeWeb from_slopes(std::vector<RatFunc> slopes,
                     BasePoint base = {Rational(0), Rational(0)});

} // namespace webconn
