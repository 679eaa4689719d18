#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "fixtures.hpp"

using namespace webconn;
using fx::rf;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const WebError& e) {
        return e.kind();
    }
    FAIL("expected a WebError");
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("valid presentations") {
    const WebEquation gold = fx::gold_web();
    CHECK(gold.d() == 4);
    CHECK(gold.pi_d() == 3);
    CHECK(gold.discriminant() == rf("-y^4*(27+4*y^4)"));
    CHECK(gold.discriminant().invertible_at(Rational(0), Rational(1)));
    CHECK_FALSE(gold.base_point_singular());

    const WebEquation parallel = fx::web_f(3, "p*(p-1)*(p-2)");
    CHECK(parallel.a(0) == RatFunc(1));
    CHECK(parallel.discriminant().num().is_constant());
    CHECK_FALSE(parallel.discriminant().is_zero());
}

TEST_CASE("rejected presentations") {
    // degree mismatch between declaration and F
    CHECK(kind_of([] { fx::web_f(3, "p^4 + x"); }) == ErrorKind::Degree);
    CHECK(kind_of([] { fx::web_f(4, "p^3 + x"); }) == ErrorKind::LeadingCoefficient);
    // repeated factor: the p-resultant vanishes identically
    CHECK(kind_of([] { fx::web_f(3, "p^2*(p-1)"); }) == ErrorKind::NonReducedWeb);
    // leading coefficient identically zero
    CHECK(kind_of([] {
        WebEquation::from_coefficients(3, {RatFunc(), RatFunc(1), RatFunc(1), RatFunc(1)});
    }) == ErrorKind::LeadingCoefficient);
    // wrong number of coefficients
    CHECK(kind_of([] {
        WebEquation::from_coefficients(3, {RatFunc(1), RatFunc(1)});
    }) == ErrorKind::Dimension);
    CHECK(kind_of([] { fx::web_f(2, "p^2 - x"); }) == ErrorKind::Degree);
}

TEST_CASE("base point on the discriminant is flagged but allowed") {
    // discriminant of the gold web vanishes at y = 0
    const WebEquation w = fx::web_f(4, "p^4 + y^2*p^2 - y*p", {Rational(0), Rational(0)});
    CHECK(w.base_point_singular());
}

TEST_CASE("webs from slopes multiply back to the presentation") {
    SUBCASE("constant slopes") {
        const SlopeWeb sw = fx::parallel_web({0, 1, 2});
        CHECK(sw.web.coeffs() ==
              std::vector<RatFunc>{RatFunc(1), RatFunc(-3), RatFunc(2), RatFunc()});
    }
    SUBCASE("polynomial slopes expand exactly") {
        const SlopeWeb sw = from_slopes({fx::Y(), RatFunc(1), RatFunc(-1)});
        PPoly expected(RatFunc(1));
        for (const RatFunc& s : sw.slopes)
            expected = expected * (PPoly::p() - PPoly(s));
        // from_slopes may rescale by a nonzero constant; compare monic forms
        const RatFunc lead = sw.web.a(0);
        PPoly got = sw.web.F();
        CHECK(lead.inv() * got == expected);
        CHECK(sw.web.F().eval(fx::Y()).is_zero());
        CHECK(sw.web.F().eval(RatFunc(1)).is_zero());
    }
    SUBCASE("rational slopes get their denominators cleared") {
        const SlopeWeb sw = fx::hexagonal4();
        for (const RatFunc& a : sw.web.coeffs()) CHECK(a.is_polynomial());
        for (const RatFunc& s : sw.slopes) CHECK(sw.web.F().eval(s).is_zero());
    }
    SUBCASE("duplicate slopes are rejected") {
        CHECK(kind_of([] { from_slopes({RatFunc(1), RatFunc(1), RatFunc(2)}); }) ==
              ErrorKind::DuplicateSlope);
    }
}

TEST_CASE("rescaling by an invertible function") {
    const WebEquation gold = fx::gold_web();
    SUBCASE("identity") {
        const WebEquation w = gold.rescale(RatFunc(1));
        CHECK(w.coeffs() == gold.coeffs());
    }
    SUBCASE("invertible at the base point") {
        const RatFunc g = RatFunc(1) + fx::X() + fx::Y() * fx::Y();
        const WebEquation w = gold.rescale(g);
        for (int i = 0; i <= 4; ++i) CHECK(w.a(i) == g * gold.a(i));
        // same zero set: the discriminant picks up a power of g
        CHECK(w.discriminant() == g.pow(7) * gold.discriminant());
    }
    SUBCASE("vanishing at the base point") {
        CHECK(kind_of([&] { (void)gold.rescale(fx::X()); }) == ErrorKind::NonInvertibleRescale);
    }
    SUBCASE("zero rescale") {
        CHECK(kind_of([&] { (void)gold.rescale(RatFunc()); }) == ErrorKind::NonInvertibleRescale);
    }
}
