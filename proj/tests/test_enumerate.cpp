#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walks/enumerate.hpp"
#include "walks/forbidden.hpp"

using namespace walks;

namespace {
const StepSet kSimple = parse_stepset("N,S,E,W");
const StepSet kKreweras = parse_stepset("NE,W,S");
const StepSet kRevKreweras = parse_stepset("N,E,SW");
const StepSet kWeighted = parse_stepset("E:2,W,N,S");
}  // namespace

TEST_CASE("empty walk initial condition") {
    auto t = count_cone(kSimple, ConeSpec::three_quadrant(1, 1), 0);
    auto tab = t.plane_table(0);
    REQUIRE(tab.size() == 1);
    CHECK(tab.at({1, 1}) == Rat(1));
}

TEST_CASE("simple three-quadrant: length-2 frozen values") {
    auto t = count_cone(kSimple, ConeSpec::three_quadrant(1, 1), 2);
    // 16 two-step sequences; two die at the origin, so 14 survive.
    CHECK(t.alive_mass(2) == Rat(14));
    // [t^2] F(t) = 2: E.W and N.S into the origin via (2? no) -- via (0,1),(1,0)
    CHECK(t.f_total(1) == Rat(0));
    CHECK(t.f_total(2) == Rat(2));
}

TEST_CASE("oracle equivalence on small models") {
    for (const StepSet& s : {kSimple, kKreweras, kWeighted}) {
        auto dp = count_cone(s, ConeSpec::three_quadrant(1, 1), 8);
        auto bf = brute_force_count(s, ConeSpec::three_quadrant(1, 1), 8);
        for (int n = 0; n <= 8; ++n) {
            CHECK(dp.plane_table(n) == bf[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("oracle equivalence on the slit plane M=4") {
    ConeSpec cone{2, 1, 1, 1};
    auto dp = count_cone(kSimple, cone, 7);
    auto bf = brute_force_count(kSimple, cone, 7);
    for (int n = 0; n <= 7; ++n) CHECK(dp.plane_table(n) == bf[static_cast<std::size_t>(n)]);
}

TEST_CASE("brute force rejects oversized n") {
    CHECK_THROWS_AS(brute_force_count(parse_stepset("N,NE,E,SE,S,SW,W,NW"),
                                      ConeSpec::three_quadrant(1, 1), 12),
                    ConeError);
}

TEST_CASE("cone validation") {
    CHECK_THROWS_AS(count_cone(kSimple, ConeSpec{0, 0, 1, 0}, 4), ConeError);
    CHECK_THROWS_AS(count_cone(kSimple, ConeSpec{1, 1, 0, 1}, 4), ConeError);
    CHECK_THROWS_AS(count_cone(kSimple, ConeSpec{1, 1, 1, 1}, -1), ConeError);
    CHECK_THROWS_AS(count_cone(kSimple, ConeSpec{0, 1, 2, 0}, 4), ConeError);
}

TEST_CASE("functional equation residuals are exactly zero") {
    for (const StepSet& s : {kSimple, kKreweras, kWeighted}) {
        for (auto [L, K] : {std::pair{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}}) {
            ConeSpec cone{L, K, 1, 1};
            auto t = count_cone(s, cone, 8);
            auto rep = verify_functional_equation(t);
            INFO("L=", L, " K=", K, " detail=", rep.detail);
            CHECK(rep.exact);
        }
    }
}

TEST_CASE("injected fault is detected") {
    auto t = count_cone(kSimple, ConeSpec::three_quadrant(1, 1), 6);
    t.quad[1][3].at(2, 1) += Rat(1);
    auto rep = verify_functional_equation(t);
    CHECK_FALSE(rep.exact);
    CHECK(rep.worst_n >= 3);  // the corrupted layer or its successor
}

TEST_CASE("mass conservation") {
    for (const StepSet& s : {kSimple, kWeighted, kRevKreweras}) {
        auto t = count_cone(s, ConeSpec::three_quadrant(1, 1), 8);
        CHECK(check_mass_conservation(t));
        auto m1 = count_cone(s, ConeSpec{0, 0, 1, 1}, 8);
        CHECK(check_mass_conservation(m1));
        auto m5 = count_cone(s, ConeSpec{2, 2, 1, 1}, 8);
        CHECK(check_mass_conservation(m5));
    }
}

TEST_CASE("boundary series support") {
    auto t = count_cone(kSimple, ConeSpec::three_quadrant(1, 1), 8);
    for (int n = 0; n <= 8; ++n) {
        LaurentPoly a = t.a_series(n), b = t.b_series(n);
        if (!a.is_zero()) CHECK(a.min_exp() >= 1);
        if (!b.is_zero()) CHECK(b.min_exp() >= 1);
    }
    // A,B,F vanish at order 0 (they carry at least one step)
    CHECK(t.a_series(0).is_zero());
    CHECK(t.b_series(0).is_zero());
    CHECK(t.f_total(0) == Rat(0));
}

TEST_CASE("three-quadrant DP equals direct plane DP") {
    // spiral sanity: for M=3 the spiral construction reproduces a plain DP
    // over C = {i>0 or j>0}
    for (const StepSet& s : {kSimple, kKreweras}) {
        auto fs = forbidden_step_series(s, 1, 1, 8);  // fs.C is the plain DP
        auto t = count_cone(s, ConeSpec::three_quadrant(1, 1), 8);
        for (int n = 0; n <= 8; ++n) CHECK(t.plane_table(n) == fs.C[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("VH split satisfies the quadrant equations") {
    // K Q_1(1/x,y) = B(1/x) + V1(y) + x V2(y) checked coefficientwise via
    // the S-table residual machinery is already exact; here check the
    // documented combinatorial readings of V1, H1 at small order.
    auto t = count_cone(kSimple, ConeSpec::three_quadrant(1, 1), 6);
    VHSplit vh = extract_vh(t);
    // [t^1] H1(x) = 0: no length-1 walk enters Q_{-1} and returns
    CHECK(vh.H1[1].is_zero());
    // V1(0;t) counts walks whose final step goes from quadrant 1 to (0,0):
    // compare against a small brute force: walks ending at origin with the
    // previous point at (-a,0)... via f_of table of quadrant 1.
    for (int n = 0; n <= 6; ++n) CHECK(vh.V1[static_cast<std::size_t>(n)].coeff(0) == t.f_of(1, n));
}

TEST_CASE("forbidden-step relation") {
    // no SE step: L = C identically
    auto fs = forbidden_step_series(kSimple, 1, 1, 10);
    for (int n = 0; n <= 10; ++n) CHECK(fs.L[static_cast<std::size_t>(n)] == fs.C[static_cast<std::size_t>(n)]);
    CHECK(check_forbidden_relation(kSimple, fs) == -1);

    // with SE present the relation is nontrivial
    StepSet s5 = parse_stepset("E,W,N,S,SE");
    auto f5 = forbidden_step_series(s5, 1, 1, 9);
    bool differs = false;
    for (int n = 0; n <= 9; ++n)
        if (!(f5.L[static_cast<std::size_t>(n)] == f5.C[static_cast<std::size_t>(n)])) differs = true;
    CHECK(differs);
    CHECK(check_forbidden_relation(s5, f5) == -1);

    StepSet kr = parse_stepset("N,W,SE");
    auto fkr = forbidden_step_series(kr, 1, 1, 9);
    CHECK(check_forbidden_relation(kr, fkr) == -1);
}
