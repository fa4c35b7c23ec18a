#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walks/groupalg.hpp"

using namespace walks;

namespace {
const StepSet kSimple = parse_stepset("N,S,E,W");
const StepSet kKreweras = parse_stepset("NE,W,S");
const StepSet kRevKreweras = parse_stepset("N,E,SW");
const StepSet kGessel = parse_stepset("E,W,NE,SW");
const StepSet kDoubleKreweras = parse_stepset("N,NE,E,S,SW,W");
const std::vector<Rat> kSamples = {Rat(1, 17), Rat(1, 23), Rat(2, 37)};
}  // namespace

TEST_CASE("generators of the simple walk") {
    GroupGenerators g = group_generators(kSimple);
    // psi: y -> 1/y, phi: x -> 1/x
    CHECK(g.psi_y == BiRational(Rat(1)) / BiRational::var_y());
    CHECK(g.phi_x == BiRational(Rat(1)) / BiRational::var_x());
}

TEST_CASE("generators are involutions and preserve P") {
    for (const StepSet& s :
         {kSimple, kKreweras, kGessel, parse_stepset("N,NE,E,S,W"), parse_stepset("E:2,W,N,S")}) {
        GroupGenerators g = group_generators(s);
        const BiRational X = BiRational::var_x(), Y = BiRational::var_y();
        CHECK(g.psi_y.compose(X, g.psi_y) == Y);
        CHECK(g.phi_x.compose(g.phi_x, Y) == X);
        BiRational P = step_polynomials(s).P;
        CHECK(P.compose(X, g.psi_y) == P);
        CHECK(P.compose(g.phi_x, Y) == P);
    }
}

TEST_CASE("Kreweras psi formula") {
    GroupGenerators g = group_generators(kKreweras);
    BiRational expect = BiRational(Rat(1)) / (BiRational::var_x() * BiRational::var_y());
    CHECK(g.psi_y == expect);
}

TEST_CASE("group orders") {
    CHECK(group_order(kSimple).order == 4);
    CHECK(group_order(kKreweras).order == 6);
    CHECK(group_order(kRevKreweras).order == 6);
    CHECK(group_order(kDoubleKreweras).order == 6);
    CHECK(group_order(kGessel).order == 8);
    CHECK(group_order(parse_stepset("N,NE,E,SE,S,SW,W,NW")).order == 4);
}

TEST_CASE("theta of the simple walk is the point reflection") {
    GroupReport rep = group_order(kSimple);
    REQUIRE(rep.finite);
    REQUIRE(rep.theta_orbit.size() == 2);
    CHECK(rep.theta_orbit[1].first == BiRational(Rat(1)) / BiRational::var_x());
    CHECK(rep.theta_orbit[1].second == BiRational(Rat(1)) / BiRational::var_y());
}

TEST_CASE("infinite groups exceed the bound") {
    for (const char* spec : {"NE,S,SW,W", "N,NE,E,SW", "N,E,S,SW,W", "N,NE,E,S,W"}) {
        GroupReport rep = group_order(parse_stepset(spec), 200);
        INFO(spec);
        CHECK_FALSE(rep.finite);
        CHECK(rep.bound == 200);
    }
}

TEST_CASE("orbit sums") {
    GroupReport rs = group_order(kSimple);
    BiRational os = orbit_sum(kSimple, 1, 1, rs);
    BiRational X = BiRational::var_x(), Y = BiRational::var_y();
    CHECK(os == X * Y - X / Y - Y / X + BiRational(Rat(1)) / (X * Y));
    CHECK_FALSE(os.is_zero());

    CHECK(orbit_sum(kKreweras, 1, 1, group_order(kKreweras)).is_zero());
    CHECK(orbit_sum(kRevKreweras, 1, 1, group_order(kRevKreweras)).is_zero());
    CHECK(orbit_sum(kGessel, 1, 1, group_order(kGessel)).is_zero());

    // axis starts decouple trivially, so their orbit sums vanish
    CHECK(orbit_sum(kSimple, 2, 0, rs).is_zero());
    CHECK(orbit_sum(kGessel, 3, 0, group_order(kGessel)).is_zero());
}

TEST_CASE("orbit sum is anti-invariant under the generators") {
    for (const StepSet& s : {kSimple, kGessel, kDoubleKreweras}) {
        GroupReport rep = group_order(s);
        BiRational os = orbit_sum(s, 1, 1, rep);
        BiRational X = BiRational::var_x(), Y = BiRational::var_y();
        CHECK(os.compose(X, rep.gens.psi_y) == -os);
        CHECK(os.compose(rep.gens.phi_x, Y) == -os);
    }
}

TEST_CASE("trivial decoupling for axis starts") {
    auto cert = decoupling_search(kSimple, 3, 0, 12, kSamples);
    CHECK(cert.found);
    CHECK(cert.R1 == BiRational::monomial(3, 0));
    CHECK(cert.R2.is_zero());
}

TEST_CASE("Kreweras decouples at (1,1)") {
    GroupReport rep = group_order(kKreweras);
    auto cert = decoupling_search(kKreweras, 1, 1, 4, kSamples, &rep);
    REQUIRE(cert.found);
    CHECK(verify_laurent_certificate(
        kKreweras, 1, 1, kSamples[0],
        [] {
            LaurentPoly r;  // 1/(2t) - 1/x at t=1/17: constant 17/2
            r.add(0, Rat(17, 2));
            r.add(-1, Rat(-1));
            return r;
        }(),
        [] {
            LaurentPoly r;
            r.add(0, Rat(17, 2));
            r.add(-1, Rat(-1));
            return r;
        }()));
    CHECK_FALSE(cert.witness.is_zero());
}

TEST_CASE("simple walk does not decouple at (1,1)") {
    GroupReport rep = group_order(kSimple);
    auto cert = decoupling_search(kSimple, 1, 1, 12, kSamples, &rep);
    CHECK_FALSE(cert.found);
    CHECK_FALSE(cert.t_dependent);
}

TEST_CASE("model 7 decouples through the kernel") {
    StepSet s7 = parse_stepset("N,NE,E,S,W");
    GroupReport rep = group_order(s7, 200);
    CHECK_FALSE(rep.finite);
    auto cert = decoupling_search(s7, 1, 1, 12, kSamples, &rep);
    REQUIRE(cert.found);
    // xy = 1/t - x - 1/x - y - 1/y on the curve; splits differ by constants
    Rat t = kSamples[0];
    BiRational X = BiRational::var_x(), Y = BiRational::var_y();
    BiRational R1exp = BiRational(Rat(1) / t) - X - BiRational(Rat(1)) / X;
    BiRational R2exp = -Y - BiRational(Rat(1)) / Y;
    BiRational diff1 = cert.R1 - R1exp;
    BiRational diff2 = cert.R2 - R2exp;
    CHECK(diff1.den() == BiPoly(Rat(1)));
    CHECK(diff1.num().deg_x() <= 0);
    CHECK((diff1 + diff2).is_zero());
}

TEST_CASE("D-trans table models do not decouple") {
    for (const char* spec : {"NE,S,SW,W", "N,NE,E,SW", "N,E,S,SW,W"}) {
        StepSet s = parse_stepset(spec);
        GroupReport rep = group_order(s, 200);
        auto cert = decoupling_search(s, 1, 1, 8, kSamples, &rep);
        INFO(spec);
        CHECK_FALSE(cert.found);
    }
}

TEST_CASE("finite-group subset: decoupling iff zero orbit sum") {
    for (const char* spec :
         {"N,S,E,W", "NE,SE,SW,NW", "NE,W,S", "N,E,SW", "N,NE,E,S,SW,W", "E,W,NE,SW",
          "N,NE,E,SE,S,SW,W,NW"}) {
        StepSet s = parse_stepset(spec);
        GroupReport rep = group_order(s);
        REQUIRE(rep.finite);
        bool zero = orbit_sum(s, 1, 1, rep).is_zero();
        auto cert = decoupling_search(s, 1, 1, 12, kSamples, &rep);
        INFO(spec);
        CHECK(cert.found == zero);
    }
}

TEST_CASE("mqc parity objects") {
    CHECK(mqc_orbit_objects(2, 0, 2, 0).tilde_e_zero);
    CHECK_FALSE(mqc_orbit_objects(2, 0, 2, 1).tilde_e_zero);
    CHECK(mqc_orbit_objects(4, 2, 1, 0).tilde_e_zero);
    CHECK_FALSE(mqc_orbit_objects(4, 1, 1, 0).tilde_e_zero);
    CHECK(mqc_orbit_objects(3, 1, 1, 1).delegates_to_orbit_sum);
}
