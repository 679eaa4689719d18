#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"

using namespace webconn;
using fx::rf;

namespace {

RatFunc dx(const RatFunc& f) { return f.derivative(Var::x); }
RatFunc dy(const RatFunc& f) { return f.derivative(Var::y); }

} // namespace

TEST_CASE("degree-4 system matrix matches the printed shape") {
    std::mt19937 rng(21);
    const WebEquation web = fx::random_slope_web(rng, 4).web;
    const AssociatedPair pair = associated_polynomials(web, 0);
    const Form1 alpha = fundamental_form(web, pair).alpha;
    auto v = [&](int j) { return pair.v(4, j); };
    const SystemMatrix m = system_matrix(web);
    // [[-v4, A1], [A1-v3, A2], [A2-v2, v1]]
    CHECK(m.at(1, 1) == -v(4));
    CHECK(m.at(1, 2) == alpha.cx);
    CHECK(m.at(2, 1) == alpha.cx - v(3));
    CHECK(m.at(2, 2) == alpha.cy);
    CHECK(m.at(3, 1) == alpha.cy - v(2));
    CHECK(m.at(3, 2) == v(1));
}

TEST_CASE("degree-5 system matrix matches the printed shape") {
    const SlopeWeb sw = from_slopes({fx::Y(), RatFunc(1), RatFunc(-1), fx::X(), fx::X() + fx::Y()},
                                    {Rational(5), Rational(7)});
    const WebEquation& web = sw.web;
    const AssociatedPair pair = associated_polynomials(web, 0);
    const Form1 alpha = fundamental_form(web, pair).alpha;
    auto v = [&](int j) { return pair.v(5, j); };
    auto a = [&](int i) { return web.a(static_cast<size_t>(i)) / web.a(0); };
    const SystemMatrix m = system_matrix(web);
    const RatFunc A1 = alpha.cx, A2 = alpha.cy;
    CHECK(m.at(1, 1) == a(5) * v(1));
    CHECK(m.at(1, 2) == -v(5));
    CHECK(m.at(1, 3) == A1);
    CHECK(m.at(2, 1) == RatFunc(-2) * v(5) + a(4) * v(1));
    CHECK(m.at(2, 2) == A1 - v(4));
    CHECK(m.at(2, 3) == A2);
    CHECK(m.at(3, 1) == A1 - RatFunc(2) * v(4) + a(3) * v(1));
    CHECK(m.at(3, 2) == A2 - v(3));
    CHECK(m.at(3, 3) == RatFunc(2) * v(2) - a(1) * v(1));
    CHECK(m.at(4, 1) == A2 - RatFunc(2) * v(3) + a(2) * v(1));
    CHECK(m.at(4, 2) == v(2) - a(1) * v(1));
    CHECK(m.at(4, 3) == v(1));

    CHECK(closedness_residual(m).staircase_ok(5));
}

TEST_CASE("closedness staircase for degree 4") {
    const SystemMatrix m = system_matrix(fx::gold_web());
    CHECK(closedness_residual(m).staircase_ok(4));
}

TEST_CASE("kernel dimensions equal pi_d") {
    std::mt19937 rng(22);
    for (int d : {3, 4, 5}) {
        const WebEquation web = fx::random_slope_web(rng, d).web;
        const JetSystem jets = adapted_basis(web, system_matrix(web));
        CHECK(jets.kernel_dim == web.pi_d());
        CHECK(jets.basis.size() == web.pi_d());
    }
}

TEST_CASE("degree-3 connection is the fundamental form") {
    std::mt19937 rng(23);
    for (int t = 0; t < 3; ++t) {
        const WebEquation web = fx::random_slope_web(rng, 3).web;
        const ConnectionData conn = connection(web);
        const Form1 alpha = fundamental_form(web).alpha;
        CHECK(conn.gamma.rows == 1);
        CHECK(conn.gamma.at(0, 0) == alpha);
        CHECK(conn.K.at(0, 0) == exterior_derivative(alpha));
    }
}

TEST_CASE("worked quartic: printed gamma and K") {
    const ConnectionData conn = connection(fx::gold_web());

    auto f1 = [](const std::string& cx, const std::string& cy) {
        return Form1{rf(cx), rf(cy)};
    };
    CHECK(conn.gamma.at(0, 0) == f1("0", "-(9+4*y^4)/(y*(27+4*y^4))"));
    CHECK(conn.gamma.at(0, 1) == f1("0", "-16*y*(-27+4*y^4)/((27+4*y^4)^2)"));
    CHECK(conn.gamma.at(0, 2) == f1("0", "96*y^2/((27+4*y^4)^2)"));
    CHECK(conn.gamma.at(1, 0) == f1("-1", "0"));
    CHECK(conn.gamma.at(1, 1) == f1("-8*y^2/(27+4*y^4)", "-(9+4*y^4)/(y*(27+4*y^4))"));
    CHECK(conn.gamma.at(1, 2) == f1("0", "-12/(27+4*y^4)"));
    CHECK(conn.gamma.at(2, 0) == f1("0", "-1"));
    CHECK(conn.gamma.at(2, 1) == f1("0", "0"));
    CHECK(conn.gamma.at(2, 2) == f1("0", "-2*(9+4*y^4)/(y*(27+4*y^4))"));

    CHECK(conn.K.at(0, 0).c == rf("-16*y*(-27+4*y^4)/((27+4*y^4)^2)"));
    CHECK(conn.K.at(0, 1).c == rf("-128*y^3*(-27+4*y^4)/((27+4*y^4)^3)"));
    CHECK(conn.K.at(0, 2).c == RatFunc());
    for (size_t i = 1; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(conn.K.at(i, j).is_zero());
    CHECK(conn.k_row ==
          std::vector<RatFunc>{rf("-16*y*(-27+4*y^4)/((27+4*y^4)^2)"),
                               rf("-128*y^3*(-27+4*y^4)/((27+4*y^4)^3)"), RatFunc()});

    // K really is d(gamma) + gamma ^ gamma
    CHECK(conn.K == matrix_curvature(conn.gamma));
}

TEST_CASE("parallel quartic: gamma keeps only the constant subdiagonal") {
    const ConnectionData conn = connection(fx::parallel_web({0, 1, 2, 3}).web);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            const Form1& e = conn.gamma.at(i, j);
            if (i == 1 && j == 0)
                CHECK(e == Form1{RatFunc(-1), RatFunc()});
            else if (i == 2 && j == 0)
                CHECK(e == Form1{RatFunc(), RatFunc(-1)});
            else
                CHECK(e.is_zero());
        }
    CHECK(conn.K.is_zero());
}

TEST_CASE("curvature sits in the first row for every supported degree") {
    std::mt19937 rng(24);
    for (int d : {3, 4}) {
        const WebEquation web = fx::random_slope_web(rng, d).web;
        const ConnectionData conn = connection(web);
        for (size_t i = 1; i < conn.K.rows; ++i)
            for (size_t j = 0; j < conn.K.cols; ++j) CHECK(conn.K.at(i, j).is_zero());
        CHECK(conn.K == matrix_curvature(conn.gamma));
    }
    const SlopeWeb sw5 = from_slopes({fx::Y(), RatFunc(1), RatFunc(-1), fx::X(), fx::X() + fx::Y()},
                                     {Rational(5), Rational(7)});
    const ConnectionData conn5 = connection(sw5.web);
    CHECK(conn5.K.rows == 6);
    for (size_t i = 1; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) CHECK(conn5.K.at(i, j).is_zero());
    CHECK(conn5.k_row[0] == trace_curvature(conn5.system));
}

TEST_CASE("closed-form trace of the curvature") {
    // d=5 printed formula
    const SlopeWeb sw = from_slopes({fx::Y(), RatFunc(1), RatFunc(-1), fx::X(), fx::X() + fx::Y()},
                                    {Rational(5), Rational(7)});
    const WebEquation& web = sw.web;
    const AssociatedPair pair = associated_polynomials(web, 0);
    const Form1 alpha = fundamental_form(web, pair).alpha;
    auto v = [&](int j) { return pair.v(5, j); };
    const RatFunc printed = RatFunc(6) * (dx(alpha.cy) - dy(alpha.cx)) +
                            RatFunc(4) * dy(v(4)) - RatFunc(8) * dx(v(3)) +
                            RatFunc(3) * dx(v(1) * web.a(2) / web.a(0)) -
                            dy(v(1) * web.a(3) / web.a(0));
    CHECK(trace_curvature(web) == printed);

    // d=3: the trace is d(alpha)
    std::mt19937 rng(25);
    const WebEquation w3 = fx::random_slope_web(rng, 3).web;
    CHECK(trace_curvature(w3) == exterior_derivative(fundamental_form(w3).alpha).c);

    // worked quartic: equals the printed k_1
    CHECK(trace_curvature(fx::gold_web()) == rf("-16*y*(-27+4*y^4)/((27+4*y^4)^2)"));

    // parallel webs are flat
    CHECK(trace_curvature(fx::parallel_web({0, 1, 2, 3, 4}).web).is_zero());
}

TEST_CASE("k_2 and k_3 relations in the normalized degree-4 basis") {
    for (const WebEquation& web : {fx::gold_web(), fx::hexagonal4().web}) {
        const ConnectionData conn = connection(web);
        const LinearizationData lin = linearization_polynomial(web);
        const std::vector<RatFunc> normal = normal_basis_curvature_4web(web, conn, lin);
        const RatFunc k1 = conn.k_row[0];
        CHECK(normal[0] == k1);
        CHECK(normal[1] == dx(k1) + lin.L1);
        CHECK(normal[2] == dy(k1) + lin.L2);
    }
    // flat web: everything vanishes
    const std::vector<RatFunc> flat = normal_basis_curvature_4web(fx::parallel_web({0, 1, 2, 3}).web);
    for (const RatFunc& k : flat) CHECK(k.is_zero());
}

TEST_CASE("k_1 is invariant under rescale") {
    std::mt19937 rng(26);
    const WebEquation web = fx::random_slope_web(rng, 4).web;
    const RatFunc g = RatFunc(1) + fx::X() + fx::Y() * fx::Y();
    CHECK(trace_curvature(web) == trace_curvature(web.rescale(g)));
}

TEST_CASE("flat fixtures have zero curvature and zero L") {
    // every K = 0 quartic fixture must satisfy L1 = L2 = 0 and deg P <= 3
    for (const SlopeWeb& sw : {fx::parallel_web({0, 1, 2, 3}), fx::hexagonal4()}) {
        const ConnectionData conn = connection(sw.web);
        if (!conn.K.is_zero()) continue;
        const LinearizationData lin = linearization_polynomial(sw.web);
        CHECK(lin.L1.is_zero());
        CHECK(lin.L2.is_zero());
        CHECK(lin.P.degree() <= 3);
    }
    // flat degree-5 fixture with v_1 = 0
    const SlopeWeb sw5 = fx::parallel_web({0, 1, 2, 3, 4});
    const ConnectionData conn5 = connection(sw5.web);
    CHECK(conn5.K.is_zero());
    const AssociatedPair pair5 = associated_polynomials(sw5.web, 0);
    CHECK(pair5.v(5, 1).is_zero());
    const LinearizationData lin5 = linearization_polynomial(sw5.web);
    CHECK(lin5.L1.is_zero());
    CHECK(lin5.L2.is_zero());
    CHECK(lin5.P.degree() <= 3);
}
