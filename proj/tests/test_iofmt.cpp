#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>

#include "logforge/iofmt.hpp"
#include "logforge/numerics.hpp"

using namespace logforge;

namespace {

std::vector<BigInt> to_basis(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

MultiValuation golden23() {
    return build_system(to_basis({2, 3}), {{8, -5}, {3, -2}});
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// minimal LP grammar walk: section order and per-line shapes
void check_lp_grammar(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> sections;
    std::regex bound_re(R"(^-\d+ <= x\d+ <= \d+$)");
    std::regex cons_re(R"(^c\d+:( \+ [0-9.]+ x\d+)+ (<=|>=) [0-9.eE+-]+$)");
    std::regex obj_re(R"(^obj:( \+ [0-9.]+ x\d+)+$)");
    std::string current;
    while (std::getline(in, line)) {
        if (line == "Minimize" || line == "Subject To" || line == "Bounds" ||
            line == "Integers" || line == "End") {
            sections.push_back(line);
            current = line;
            continue;
        }
        REQUIRE_FALSE(current.empty());
        if (current == "Minimize") CHECK(std::regex_match(line, obj_re));
        if (current == "Subject To") CHECK(std::regex_match(line, cons_re));
        if (current == "Bounds") CHECK(std::regex_match(line, bound_re));
        if (current == "Integers") CHECK(std::regex_match(line, std::regex(R"(^x\d+( x\d+)*$)")));
    }
    CHECK(sections == std::vector<std::string>{"Minimize", "Subject To", "Bounds",
                                               "Integers", "End"});
}

}  // namespace

TEST_CASE("polynomial string format") {
    CHECK(poly_string(Poly({BigInt(720)})) == "1 720");
    CHECK(poly_string(Poly({BigInt(1), BigInt(3), BigInt(2)})) == "3 1 3 2");
    CHECK(poly_string(Poly(std::vector<BigInt>{})) == "1 0");
}

TEST_CASE("flint strings for log(2) frozen by hand") {
    auto f = flint_strings(log_series_flint(2, 1));
    CHECK(f[0] == "2 499 598");
    CHECK(f[1] == "3 720 5184 5184");
    CHECK(f[2] == "3 1 3 2");
    CHECK(f[3] == "3 1080 7776 7776");
}

TEST_CASE("flint strings of the (8,9) series carry the table integers") {
    FlintSeries s = log_series_flint(8, 9);
    // nu * Q.lead == delta * P.lead ties the strings to the printed rate
    BigInt nu = 1, delta = 161803008;
    BigInt lhs = nu * s.Q.lead(), rhs = delta * s.P.lead();
    CHECK(lhs == rhs);
    // alpha = -(u+v) * (lead of A) for the unit prefactor numerator here
    CHECK(BigInt(-17) * s.A.lead() == BigInt("12705086"));
}

TEST_CASE("ycruncher export carries the rate integers and round-trips") {
    MultiValuation mv = golden23();
    std::string text = ycruncher_export(mv);
    CHECK(contains(text, "4826809"));       // nu of the first series, in PolR
    CHECK(contains(text, "323606016"));     // 2 * delta, the PolQ lead of (8,9)
    YCruncherSeries y2 = to_ycruncher(8, 9);
    BigInt twice_delta = BigInt(161803008) * 2;
    CHECK(y2.Q.lead() == twice_delta);
    CHECK(contains(text, "log(2)"));
    // every integer reparsed from the text matches a fresh export
    CHECK(ycruncher_export(mv) == text);
    MultiValuation empty;
    CHECK_THROWS_AS(ycruncher_export(empty), std::invalid_argument);
}

TEST_CASE("lp export layout and bounds") {
    std::string lp = lp_export(to_basis({2, 3}), 64, 0.6, 1, 0.5e-5);
    CHECK(contains(lp, "c1:"));
    CHECK(contains(lp, "c2:"));
    CHECK(contains(lp, "-64 <= x2 <= 64"));
    CHECK(contains(lp, "-41 <= x3 <= 41"));
    check_lp_grammar(lp);
    CHECK_THROWS_AS(lp_export({}, 64, 0.6, 1, 0.5e-5), std::invalid_argument);
}

TEST_CASE("report carries the published totals and sections") {
    MultiValuation mv = golden23();
    SearchConfig cfg;
    cfg.basis = mv.basis;
    cfg.bits_b = 64;
    cfg.tol = 0.6;
    ReportMeta meta;
    meta.bounds = {64, 41};
    std::string r = report(SolutionPool{}, mv, cfg, meta);
    CHECK(contains(r, "0.759456"));
    CHECK(contains(r, "INTEGERS"));
    CHECK(contains(r, "POWER BOUNDS"));
    CHECK(contains(r, "BITS REQUIRED"));
    CHECK(contains(r, "BITS OBTAINED"));
    CHECK(contains(r, "SOLUTION X = [x_ij] MATRIX"));
    CHECK(contains(r, "LINEAR COMBINATION COEFFICIENTS X^(-1)"));
    CHECK(contains(r, "FLINT HYPERGEOMETRIC POLYNOMIALS [PolA, PolB, PolP, PolQ]"));
    CHECK(contains(r,
                   "Y-CRUNCHER HYPERGEOMETRIC POLYNOMIALS [[CoefP, CoefD], PolP, PolR, "
                   "PolQ]"));
    CHECK(contains(r, "HYPERGEOMETRIC SERIES PARAMETERS [Alpha, Beta, Gamma, Nu, Delta]"));
    CHECK(contains(r, "MINIMUM GAP"));
    // plain ASCII only
    for (unsigned char ch : r) CHECK(ch < 128);
}

TEST_CASE("system json round-trips through build_system") {
    MultiValuation mv = golden23();
    SearchConfig cfg;
    cfg.basis = mv.basis;
    std::string r = report(SolutionPool{}, mv, cfg, ReportMeta{});
    MultiValuation back = system_from_report(r);
    CHECK(back.X == mv.X);
    CHECK(back.Xinv == mv.Xinv);
    CHECK(back.basis == mv.basis);
    // bare json is accepted too
    MultiValuation back2 = system_from_report(system_to_json(mv));
    CHECK(back2.X == mv.X);
}

TEST_CASE("six-digit formatting") {
    CHECK(fmt6(0.7594555439740684) == "0.759456");
    CHECK(fmt6(1.0) == "1");
    CHECK(fmt6(0.052116) == "0.052116");
}
