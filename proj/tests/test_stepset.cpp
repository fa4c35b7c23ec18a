#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walks/stepset.hpp"

using namespace walks;

TEST_CASE("parse simple lists") {
    StepSet s = parse_stepset("N,S,E,W");
    CHECK(s.weight(0, 1) == Rat(1));
    CHECK(s.weight(0, -1) == Rat(1));
    CHECK(s.weight(1, 0) == Rat(1));
    CHECK(s.weight(-1, 0) == Rat(1));
    CHECK(s.weight(1, 1) == Rat(0));
    CHECK(s.total_weight() == Rat(4));
}

TEST_CASE("parse weights and coordinates") {
    StepSet s = parse_stepset("E:1/2, NE:3");
    CHECK(s.weight(1, 0) == Rat(1, 2));
    CHECK(s.weight(1, 1) == Rat(3));
    StepSet c = parse_stepset("(1,0):2, (-1,-1):1/3");
    CHECK(c.weight(1, 0) == Rat(2));
    CHECK(c.weight(-1, -1) == Rat(1, 3));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_stepset("N,N"), StepSetError);
    CHECK_THROWS_AS(parse_stepset("Q"), StepSetError);
    CHECK_THROWS_AS(parse_stepset("N:0"), StepSetError);
    CHECK_THROWS_AS(parse_stepset("N:-1"), StepSetError);
    CHECK_THROWS_AS(parse_stepset(""), StepSetError);
    CHECK_THROWS_AS(parse_stepset("(2,0)"), StepSetError);
}

TEST_CASE("parse then serialize round-trips") {
    for (const char* spec : {"N,S,E,W", "E:1/2,NE:3", "NE,W,S", "N,NE,E,SE,S,SW,W,NW"}) {
        StepSet s = parse_stepset(spec);
        StepSet s2 = parse_stepset(serialize_stepset(s));
        CHECK(s == s2);
        CHECK(serialize_stepset(s) == serialize_stepset(s2));
    }
}

TEST_CASE("nonsingularity") {
    CHECK(is_nonsingular(parse_stepset("N,S,E,W")));
    CHECK_FALSE(is_nonsingular(parse_stepset("NE,E,SE")));
    CHECK_FALSE(is_nonsingular(parse_stepset("NE,N,SE,S")));
    CHECK_FALSE(is_nonsingular(parse_stepset("NE,SW")));
    CHECK(is_nonsingular(parse_stepset("NE,W,S")));
}

TEST_CASE("nonsingularity is dihedral invariant") {
    for (const char* spec : {"N,S,E,W", "NE,E,SE", "NE,W,S", "N,NE,E,SW", "NE,N,SE,S"}) {
        StepSet s = parse_stepset(spec);
        bool base = is_nonsingular(s);
        StepSet r = s;
        for (int k = 0; k < 4; ++k) {
            r = r.rotated();
            CHECK(is_nonsingular(r) == base);
            CHECK(is_nonsingular(r.reflected_diag()) == base);
        }
    }
}

TEST_CASE("step polynomials decompose P") {
    StepSet s = parse_stepset("N,S,E,W");
    StepPolynomials sp = step_polynomials(s);
    CHECK(sp.A_(1).coeff(0) == Rat(1));
    CHECK(sp.A_(-1).coeff(0) == Rat(1));
    CHECK(sp.A_(0).coeff(1) == Rat(1));
    CHECK(sp.A_(0).coeff(-1) == Rat(1));
    CHECK(sp.P.eval(Rat(1), Rat(1)) == Rat(4));

    StepSet w = parse_stepset("E:2,SW:1/3");
    StepPolynomials wp = step_polynomials(w);
    // P = 2x + (1/3) x^{-1} y^{-1}
    CHECK(wp.P.eval(Rat(2), Rat(3)) == Rat(4) + Rat(1, 18));
    CHECK(wp.B_(1).coeff(0) == Rat(2));
    CHECK(wp.B_(-1).coeff(-1) == Rat(1, 3));
}

TEST_CASE("P decompositions agree at sample points") {
    StepSet s = parse_stepset("N:2/7,SE:3,W:1/2,SW:5");
    StepPolynomials sp = step_polynomials(s);
    CHECK(sp.P.eval(Rat(1), Rat(1)) == s.total_weight());
    for (long xv : {2L, 3L}) {
        for (long yv : {2L, 5L}) {
            Rat x(xv), y(yv);
            Rat lhs = sp.P.eval(x, y);
            Rat rhs = sp.A_(-1).eval(x) / y + sp.A_(0).eval(x) + sp.A_(1).eval(x) * y;
            CHECK(lhs == rhs);
            Rat rhs2 = sp.B_(-1).eval(y) / x + sp.B_(0).eval(y) + sp.B_(1).eval(y) * x;
            CHECK(lhs == rhs2);
        }
    }
}
