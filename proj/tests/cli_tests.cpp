#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "json.hpp"

using namespace webconn;
using fx::rf;

namespace {

const char* kGoldSpec = "degree = 4\nF = p^4 + y^2*p^2 - y*p\nbase_point = 0 1\n";

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

TEST_CASE("spec files parse") {
    const WebSpecFile gold = parse_spec(kGoldSpec);
    CHECK(gold.degree == 4);
    REQUIRE(gold.f_text);
    CHECK(*gold.f_text == "p^4 + y^2*p^2 - y*p");
    CHECK(gold.base.x == Rational(0));
    CHECK(gold.base.y == Rational(1));

    const WebSpecFile slopes = parse_spec("# parallel web\ndegree = 3\nslopes = [0, 1, 2]\n");
    REQUIRE(slopes.slope_texts);
    CHECK(*slopes.slope_texts == std::vector<std::string>{"0", "1", "2"});

    // commas inside parentheses do not split entries; fractions allowed
    const WebSpecFile rational =
        parse_spec("degree = 3\nslopes = [y/(x-1), 1, -1]\nbase_point = 1/2 -3\n");
    CHECK((*rational.slope_texts)[0] == "y/(x-1)");
    CHECK(rational.base.x == Rational(1, 2));
    CHECK(rational.base.y == Rational(-3));
}

TEST_CASE("spec files that do not parse") {
    CHECK(kind_of([] { parse_spec("F = p^3\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_spec("degree = 3\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_spec("degree = three\nF = p^3\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_spec("degree = 3\nnope = 1\nF = p^3 - p\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_spec("degree = 3\nslopes = 0, 1, 2\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_spec("degree = 3\nbase_point = 0\nF = p^3 - p\n"); }) ==
          ErrorKind::Parse);
    // both input kinds at once
    CHECK(kind_of([] {
        parse_spec("degree = 4\nF = p^4 - p\nslopes = [0, 1, 2, 3]\n");
    }) == ErrorKind::Ambiguity);
}

TEST_CASE("degree gating") {
    const std::string big = "degree = 7\nslopes = [0, 1, 2, 3, 4, 5, 6]\n";
    CHECK(kind_of([&] { run(Command::Classify, parse_spec(big), {}); }) ==
          ErrorKind::UnsupportedDegree);
    Options experimental;
    experimental.experimental = true;
    const Report r = run(Command::Classify, parse_spec(big), experimental);
    CHECK(r.degree == 7);
    CHECK(*r.is_linear);

    CHECK(kind_of([] { run(Command::Classify, parse_spec("degree = 2\nF = p^2 - x\n"), {}); }) ==
          ErrorKind::Degree);
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(ErrorKind::Parse) == 1);
    CHECK(exit_code_for(ErrorKind::Ambiguity) == 2);
    CHECK(exit_code_for(ErrorKind::NonReducedWeb) == 2);
    CHECK(exit_code_for(ErrorKind::SlopeRequired) == 2);
    CHECK(exit_code_for(ErrorKind::UnsupportedDegree) == 3);
    CHECK(exit_code_for(ErrorKind::Internal) == 4);
    CHECK(exit_code_for(ErrorKind::ProlongationFailure) == 4);
}

TEST_CASE("analyze reports the worked quartic") {
    const Report r = run(Command::Analyze, parse_spec(kGoldSpec), {});
    CHECK(r.input_kind == "F");
    CHECK(*r.discriminant == rf("-y^4*(27+4*y^4)").str());
    CHECK(*r.web_rank == 2);
    CHECK(*r.generic_rank == 1);
    REQUIRE(r.gamma);
    CHECK((*r.gamma)[1][0] == "(-1) dx");
    CHECK((*r.gamma)[2][1] == "0");
    REQUIRE(r.curvature);
    CHECK((*r.curvature)[0][2] == "0");
    CHECK((*r.curvature)[1][0] == "0");
    CHECK_FALSE(r.trace_residual); // coefficient input: no extraction
}

TEST_CASE("command selection") {
    const WebSpecFile spec = parse_spec(kGoldSpec);
    const Report inv = run(Command::Invariants, spec, {});
    CHECK(inv.alpha);
    CHECK_FALSE(inv.gamma);
    const Report cls = run(Command::Classify, spec, {});
    CHECK(cls.is_linear);
    CHECK_FALSE(cls.alpha);
    const Report conn = run(Command::Connection, spec, {});
    CHECK(conn.gamma);
    CHECK_FALSE(conn.curvature);
    const Report curv = run(Command::Curvature, spec, {});
    CHECK(curv.curvature);
    CHECK(curv.normal_row);
    CHECK_FALSE(curv.kml);
    const Report rank = run(Command::Rank, spec, {});
    CHECK(rank.kml);
    CHECK(*rank.web_rank == 2);

    CHECK(parse_command("trace-check") == Command::TraceCheck);
    CHECK(kind_of([] { parse_command("bogus"); }) == ErrorKind::Parse);
}

TEST_CASE("trace-check command") {
    const WebSpecFile spec = parse_spec("degree = 4\nslopes = [0, 1, 2, x+y]\n");
    const Report r = run(Command::TraceCheck, spec, {});
    CHECK(*r.trace_residual == "0");
    CHECK_FALSE(*r.hexagonal);

    // needs slopes
    CHECK(kind_of([] { run(Command::TraceCheck, parse_spec(kGoldSpec), {}); }) ==
          ErrorKind::SlopeRequired);

    const Report flat = run(Command::Rank, parse_spec("degree = 4\nslopes = [0, 1, 2, 3]\n"), {});
    CHECK(*flat.web_rank == 3);
}

TEST_CASE("serialization is deterministic and re-parses") {
    const Report r = run(Command::Analyze, parse_spec(kGoldSpec), {});
    const std::string text1 = serialize_report(r, false);
    const std::string text2 = serialize_report(r, false);
    CHECK(text1 == text2);
    const std::string json1 = serialize_report(r, true);
    CHECK(json1 == serialize_report(r, true));

    const nlohmann::json j = nlohmann::json::parse(json1);
    CHECK(j["web_rank"] == 2);
    CHECK(j["degree"] == 4);
    // expression strings reparse to the symbolic values
    CHECK(rf(j["discriminant"].get<std::string>()) == rf("-y^4*(27+4*y^4)"));
    CHECK(rf(j["kml"][0][0].get<std::string>()) == rf("-16*y*(-27+4*y^4)/((27+4*y^4)^2)"));
    CHECK(j["input"]["kind"] == "F");

    // a flat web reports zero curvature entries
    const Report flat = run(Command::Curvature, parse_spec("degree = 4\nslopes = [0, 1, 2, 3]\n"), {});
    for (const auto& row : *flat.curvature)
        for (const std::string& e : row) CHECK(e == "0");
}

TEST_CASE("text report shows the printed gamma entries") {
    const Report r = run(Command::Connection, parse_spec(kGoldSpec), {});
    const std::string text = serialize_report(r, false);
    CHECK(text.find("gamma:") != std::string::npos);
    CHECK(text.find("(-1) dx") != std::string::npos);
    // canonical form of the (0,0) entry
    CHECK((*r.gamma)[0][0] == "(" + rf("-(9+4*y^4)/(y*(27+4*y^4))").str() + ") dy");
}
