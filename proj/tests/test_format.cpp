#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivic/expr.hpp"
#include "motivic/format.hpp"
#include "motivic/group_classes.hpp"
#include "motivic/series.hpp"

using motivic::class_of;
using motivic::class_from_json;
using motivic::expand;
using motivic::GroupSpec;
using motivic::Int;
using motivic::IntPoly;
using motivic::LaurentTail;
using motivic::MotivicClass;
using motivic::to_json;
using motivic::to_latex;
using motivic::to_plain;

namespace {

MotivicClass lpoly(std::vector<std::pair<long long, Int>> terms) {
    return MotivicClass::from_poly(IntPoly::from_terms(terms));
}

} // namespace

TEST_CASE("plain printing") {
    CHECK(to_plain(class_of(GroupSpec::bso(3))) == "L^-1 * (L^2-1)^-1");
    CHECK(to_plain(class_of(GroupSpec::bo(4))) == "(L^2-1)^-1 * (L^4-1)^-1");
    CHECK(to_plain(class_of(GroupSpec::bso(4))) == "L^-2 * (L^2-1)^-2");
    CHECK(to_plain(class_of(GroupSpec::so(3))) == "L * (L^2 - 1)");

    CHECK(to_plain(MotivicClass::zero()) == "0");
    CHECK(to_plain(MotivicClass::one()) == "1");
    CHECK(to_plain(MotivicClass::from_int(-1)) == "-1");
    CHECK(to_plain(MotivicClass::from_int(7)) == "7");
    CHECK(to_plain(MotivicClass::lefschetz()) == "L");
    CHECK(to_plain(MotivicClass::lpower(-1)) == "L^-1");
    CHECK(to_plain(lpoly({{1, 1}, {0, 1}})) == "(L + 1)");
    CHECK(to_plain(lpoly({{3, 2}, {1, -3}, {0, 1}})) == "(2*L^3 - 3*L + 1)");
    CHECK(to_plain(-(MotivicClass::lefschetz() * lpoly({{1, 1}, {0, -1}}).inv()))
          == "-L * (L-1)^-1");

    // a denominator that cannot regroup into L^n - 1 blocks stays cyclotomic
    CHECK(to_plain(lpoly({{1, 1}, {0, 1}}).inv()) == "(L + 1)^-1");
}

TEST_CASE("latex printing") {
    CHECK(to_latex(class_of(GroupSpec::bso(3))) == "\\mathbb{L}^{-1}(\\mathbb{L}^{2}-1)^{-1}");
    CHECK(to_latex(MotivicClass::lefschetz()) == "\\mathbb{L}");
    CHECK(to_latex(MotivicClass::zero()) == "0");
    CHECK(to_latex(lpoly({{2, 1}, {0, -1}})) == "(\\mathbb{L}^{2} - 1)");
    CHECK(to_latex(class_of(GroupSpec::bso(4))) == "\\mathbb{L}^{-2}(\\mathbb{L}^{2}-1)^{-2}");
}

TEST_CASE("json schema") {
    CHECK(to_json(class_of(GroupSpec::bso(3))).dump()
          == R"({"sign":1,"lpow":-1,"num":[["1",0]],"den":{"1":1,"2":1}})");
    CHECK(to_json(MotivicClass::zero()).dump() == R"({"sign":1,"lpow":0,"num":[],"den":{}})");
    CHECK(to_json(lpoly({{2, 1}, {0, -1}})).dump()
          == R"({"sign":1,"lpow":0,"num":[["-1",0],["1",2]],"den":{}})");
}

TEST_CASE("json reader renormalizes") {
    // 2(L-1)/(L-1) = 2
    auto j = nlohmann::json::parse(R"({"sign":1,"lpow":0,"num":[["-2",0],["2",1]],"den":{"1":1}})");
    CHECK(class_from_json(j) == MotivicClass::from_int(2));
    CHECK_THROWS(class_from_json(nlohmann::json::parse(R"({"sign":1})")));
}

TEST_CASE("tail printing") {
    CHECK(to_plain(expand(lpoly({{1, 1}, {0, -1}}).inv(), -4)) == "L^-1 + L^-2 + L^-3 + L^-4");
    CHECK(to_plain(expand(lpoly({{2, 1}, {0, -1}}), -2)) == "L^2 - 1");
    CHECK(to_plain(expand(MotivicClass::zero(), -2)) == "0");
    CHECK(to_plain(expand(MotivicClass::from_int(5), 0)) == "5");
    CHECK(to_plain(expand(-(MotivicClass::lpower(2) + MotivicClass::one()), 0)) == "-L^2 - 1");
    CHECK(to_plain(expand(class_of(GroupSpec::bso(3)), -7)) == "L^-3 + L^-5 + L^-7");
}

TEST_CASE("trace formatting") {
    auto [value, trace] = motivic::recurse_bso(4);
    std::string plain = motivic::format_trace(trace, motivic::OutputFormat::Plain);
    CHECK(plain.find("derivation of {BSO_4}") != std::string::npos);
    CHECK(plain.find("[CmodG]") != std::string::npos);
    CHECK(plain.find("L^-2 * (L^2-1)^-2") != std::string::npos);

    auto j = nlohmann::json::parse(motivic::format_trace(trace, motivic::OutputFormat::Json));
    CHECK(j["group"] == "SO");
    CHECK(j["n"] == 4);
    CHECK(j["steps"].size() == 6);
    CHECK(j["steps"][0]["label"] == "CmodG");
    CHECK(class_from_json(j["final"]) == value);
    for (const auto& step : j["steps"]) {
        CHECK(step.contains("formula"));
        CHECK(step.contains("anchor"));
        CHECK(step.contains("value"));
    }
}
