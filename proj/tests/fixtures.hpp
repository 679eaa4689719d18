#pragma once

// Shared fixtures and small helpers for the test binaries.

#include <random>
#include <string>
#include <vector>

#include "webconn/cli.hpp"
#include "webconn/expr.hpp"

namespace fx {

using namespace webconn;

inline RatFunc X() { return RatFunc::variable(Var::x); }
inline RatFunc Y() { return RatFunc::variable(Var::y); }

// Rational function from source text (no p allowed).
inline RatFunc rf(const std::string& text) { return to_ratfunc(parse_expression(text, false)); }

inline WebEquation web_f(int d, const std::string& f_text,
                         BasePoint base = {Rational(0), Rational(0)}) {
    return web_from_f(d, parse_expression(f_text, true), base);
}

// The worked quartic p^4 + y^2 p^2 - y p = 0 at base point (0, 1).
inline WebEquation gold_web() {
    return web_f(4, "p^4 + y^2*p^2 - y*p", {Rational(0), Rational(1)});
}

inline SlopeWeb parallel_web(std::vector<long> cs, BasePoint base = {Rational(0), Rational(0)}) {
    std::vector<RatFunc> slopes;
    for (long c : cs) slopes.emplace_back(c);
    return from_slopes(std::move(slopes), base);
}

// d pencils of lines through distinct base points; every extracted 3-web of
// pencils is hexagonal, so the whole web is.
inline SlopeWeb pencil_web(const std::vector<std::pair<long, long>>& points,
                           BasePoint base = {Rational(5), Rational(7)}) {
    std::vector<RatFunc> slopes;
    for (const auto& [a, b] : points)
        slopes.push_back((Y() - RatFunc(b)) / (X() - RatFunc(a)));
    return from_slopes(std::move(slopes), base);
}

inline SlopeWeb hexagonal4() { return pencil_web({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

// Random affine slope c0 + c1 x + c2 y with small integer coefficients.
inline RatFunc random_affine(std::mt19937& rng) {
    std::uniform_int_distribution<long> c(-3, 3);
    return RatFunc(c(rng)) + RatFunc(c(rng)) * X() + RatFunc(c(rng)) * Y();
}

inline SlopeWeb random_slope_web(std::mt19937& rng, int d,
                                 BasePoint base = {Rational(0), Rational(0)}) {
    for (;;) {
        std::vector<RatFunc> slopes;
        while (static_cast<int>(slopes.size()) < d) {
            RatFunc s = random_affine(rng);
            bool fresh = true;
            for (const RatFunc& t : slopes) fresh = fresh && t != s;
            if (fresh) slopes.push_back(s);
        }
        try {
            return from_slopes(std::move(slopes), base);
        } catch (const WebError&) {
            // degenerate draw (e.g. vanishing resultant); redraw
        }
    }
}

// Random presentation a_0 = 1, a_i small bilinear polynomials.
inline WebEquation random_coeff_web(std::mt19937& rng, int d,
                                    BasePoint base = {Rational(0), Rational(0)}) {
    std::uniform_int_distribution<long> c(-2, 2);
    for (;;) {
        std::vector<RatFunc> coeffs{RatFunc(1)};
        for (int i = 1; i <= d; ++i)
            coeffs.push_back(RatFunc(c(rng)) + RatFunc(c(rng)) * X() + RatFunc(c(rng)) * Y() +
                             RatFunc(c(rng)) * X() * Y());
        try {
            return WebEquation::from_coefficients(d, std::move(coeffs), base);
        } catch (const WebError&) {
            // non-reduced draw; redraw
        }
    }
}

// p^i (dF/dx + p dF/dy) - U F - V dF/dp, which must vanish identically.
inline PPoly defining_residual(const WebEquation& web, const AssociatedPair& pair) {
    const PPoly f = web.F();
    const PPoly lhs = PPoly::monomial(static_cast<unsigned>(pair.order), RatFunc(1)) *
                      (f.derivative(Var::x) + PPoly::p() * f.derivative(Var::y));
    return lhs - (pair.U * f + pair.V * web.F_p());
}

} // namespace fx
