#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "walks/kernelnum.hpp"

using namespace walks;

namespace {
const StepSet kSimple = parse_stepset("N,S,E,W");
}

TEST_CASE("discriminant of the simple walk at t=1/10") {
    // D(x) = (x^2-10x+1)^2 - 4x^2 = (x^2-12x+1)(x^2-8x+1)
    Discriminants d = kernel_discriminants(kSimple, Rat(1, 10));
    UPoly expect = UPoly(std::vector<Rat>{Rat(1), Rat(-12), Rat(1)}) *
                   UPoly(std::vector<Rat>{Rat(1), Rat(-8), Rat(1)});
    CHECK(d.D == expect);
    CHECK(d.E == d.D);  // x<->y symmetric model
}

TEST_CASE("t out of range is rejected") {
    CHECK_THROWS_AS(kernel_discriminants(kSimple, Rat(1, 4)), KernelNumError);
    CHECK_THROWS_AS(kernel_discriminants(kSimple, Rat(0)), KernelNumError);
    CHECK_THROWS_AS(kernel_discriminants(kSimple, Rat(-1, 10)), KernelNumError);
}

TEST_CASE("branch points of the simple walk match the quadratic roots") {
    KernelNumerics kn = kernel_numerics(kSimple, Rat(1, 10));
    CHECK(std::abs(kn.a[0] - (6 - std::sqrt(35.0))) < 1e-10);
    CHECK(std::abs(kn.a[1] - (4 - std::sqrt(15.0))) < 1e-10);
    CHECK(std::abs(kn.a[2] - (4 + std::sqrt(15.0))) < 1e-10);
    CHECK(std::abs(kn.a[3] - (6 + std::sqrt(35.0))) < 1e-10);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(kn.b[i] - kn.a[i]) < 1e-10);
    CHECK(std::abs(kn.x4 - (-1.0)) < 1e-10);
}

TEST_CASE("branch ordering invariant") {
    for (const char* spec : {"N,S,E,W", "E:2,W,N,S", "NE,W,S", "E,W,NE,SW", "N,NE,E,S,W"}) {
        StepSet s = parse_stepset(spec);
        Rat tmax = Rat(1) / s.total_weight();
        Rat t = tmax / 3;
        KernelNumerics kn = kernel_numerics(s, t);
        INFO(spec);
        CHECK(kn.a[0] > -1.0);
        CHECK(kn.a[0] < kn.a[1]);
        CHECK(kn.a[1] < 1.0);
        CHECK(kn.a[2] > 1.0);
        if (!kn.a4_infinite) CHECK((kn.a[3] > kn.a[2] || kn.a[3] < -1.0));
        // D vanishes at the reported roots
        for (int i = 0; i < (kn.a4_infinite ? 3 : 4); ++i)
            CHECK(std::abs(kn.disc.D.eval(kn.a[i])) < 1e-6 * (1 + std::pow(std::abs(kn.a[i]), 4)));
        CHECK(kn.omega3 > 0);
        CHECK(kn.omega3 < kn.omega2);
        CHECK(kn.omega1_im > 0);
    }
}

TEST_CASE("gamma over pi tau is 1/4 for simple walks") {
    for (Rat t : {Rat(1, 20), Rat(1, 10), Rat(1, 5)}) {
        KernelNumerics kn = kernel_numerics(kSimple, t);
        CHECK(std::abs(kn.ratio - 0.25) < 1e-9);
    }
}

TEST_CASE("Kreweras has cubic discriminant and ratio 1/6") {
    // group order 6: N=3 copies telescope, measured ratio 1/3
    KernelNumerics kn = kernel_numerics(parse_stepset("NE,W,S"), Rat(1, 10));
    CHECK(kn.a4_infinite);
    CHECK(std::abs(kn.ratio - 1.0 / 3.0) < 1e-9);
}

TEST_CASE("Gessel ratio 1/8") {
    KernelNumerics kn = kernel_numerics(parse_stepset("E,W,NE,SW"), Rat(1, 10));
    CHECK(std::abs(kn.ratio - 0.375) < 1e-9);
}

TEST_CASE("quadrature convergence under tolerance tightening") {
    KernelNumerics kn = kernel_numerics(kSimple, Rat(1, 10));
    Periods w1 = periods(kn.disc.D, kn.a, kn.a4_infinite, kn.x4, 1e-10);
    Periods w2 = periods(kn.disc.D, kn.a, kn.a4_infinite, kn.x4, 1e-14);
    CHECK(std::abs(w1.omega2 - w2.omega2) < 1e-10 * std::abs(w2.omega2));
    CHECK(std::abs(w1.omega3 - w2.omega3) < 1e-10 * std::abs(w2.omega3));
    CHECK(std::abs(w1.omega1_im - w2.omega1_im) < 5e-10 * std::abs(w2.omega1_im));
}

TEST_CASE("ratio detection") {
    auto r1 = ratio_detect(0.2500000001, 64, 1e-8);
    CHECK(r1.rational);
    CHECK(r1.num == 1);
    CHECK(r1.den == 4);
    auto r2 = ratio_detect(1.0 / std::sqrt(2.0), 10000, 1e-10);
    CHECK_FALSE(r2.rational);
    auto r3 = ratio_detect(kernel_numerics(kSimple, Rat(1, 10)).ratio, 64, 1e-8);
    CHECK(r3.rational);
    CHECK(r3.num * 4 == r3.den);
}

TEST_CASE("cone angle ladder") {
    KernelNumerics kn = kernel_numerics(kSimple, Rat(1, 10));
    // M even: hat tau / tau = M/2 exactly by the ladder definition
    for (auto [L, K] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 3}}) {
        int M = L + K + 1;
        if (M % 2) continue;
        ConeAngles ca = cone_angles(kn, L, K);
        double ratio = ca.hat_tau.imag() / kn.tau_im;
        CHECK(std::abs(ratio - M / 2.0) < 1e-10);
    }
    // M odd: N2 * hat_tau/tau integer iff N2 * 2 gamma/(pi tau) integer;
    // for simple walks 2gamma/(pi tau) = 1/2, so N2 = 2 works for M = 3.
    ConeAngles ca3 = cone_angles(kn, 1, 1);
    double ht = ca3.hat_tau.imag() / kn.tau_im;
    CHECK(std::abs(2 * ht - std::round(2 * ht)) < 1e-10);
    double r2g = 2 * kn.gamma_im / (M_PI * kn.tau_im);
    CHECK(std::abs(2 * r2g - std::round(2 * r2g)) < 1e-10);
}
