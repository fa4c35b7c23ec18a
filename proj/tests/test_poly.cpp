#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walks/birational.hpp"

using namespace walks;

TEST_CASE("upoly divmod and gcd") {
    // (x^2-1) = (x-1)(x+1)
    UPoly a(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
    UPoly b(std::vector<Rat>{Rat(-1), Rat(1)});
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    CHECK(r.is_zero());
    CHECK(q == UPoly(std::vector<Rat>{Rat(1), Rat(1)}));
    UPoly g = UPoly::gcd(a, b);
    CHECK(g.degree() == 1);
    CHECK(g.coeff(0) == Rat(-1));

    UPoly c(std::vector<Rat>{Rat(2), Rat(0), Rat(2)});  // 2x^2+2, coprime with b
    CHECK(UPoly::gcd(c, b).degree() == 0);
}

TEST_CASE("laurent arithmetic") {
    LaurentPoly a;
    a.add(-2, Rat(3));
    a.add(1, Rat(1));
    LaurentPoly b;
    b.add(2, Rat(1));
    LaurentPoly p = a * b;
    CHECK(p.coeff(0) == Rat(3));
    CHECK(p.coeff(3) == Rat(1));
    CHECK(p.eval(Rat(2)) == Rat(3) + Rat(8));
}

TEST_CASE("bivariate gcd and exact division") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    BiPoly f = (x + y) * (x * y + BiPoly(Rat(1)));
    BiPoly g = (x + y) * (x - y);
    BiPoly gc = bipoly_gcd(f, g);
    // gcd is x+y up to a rational scalar
    BiPoly q = BiRational::exact_divide(f, gc);
    CHECK(q * gc == f);
    BiPoly q2 = BiRational::exact_divide(g, gc);
    CHECK(q2 * gc == g);
    CHECK(gc.deg_x() == 1);
    CHECK(gc.deg_y() == 1);
}

TEST_CASE("birational normalization gives syntactic equality") {
    BiRational x = BiRational::var_x(), y = BiRational::var_y();
    BiRational a = (x * x - y * y) / (x - y);
    BiRational b = x + y;
    CHECK(a == b);
    BiRational c = (x / y + y / x);
    BiRational d = (x * x + y * y) / (x * y);
    CHECK(c == d);
}

TEST_CASE("birational compose") {
    BiRational x = BiRational::var_x(), y = BiRational::var_y();
    BiRational f = x * y + BiRational(Rat(2));
    BiRational g = f.compose(y, x);  // swap
    CHECK(g == y * x + BiRational(Rat(2)));
    BiRational inv = f.compose(BiRational(Rat(1)) / x, y);
    CHECK(inv == y / x + BiRational(Rat(2)));
}

TEST_CASE("birational pow and eval") {
    BiRational x = BiRational::var_x(), y = BiRational::var_y();
    BiRational f = (x + y).pow(3);
    CHECK(f.eval(Rat(1), Rat(2)) == Rat(27));
    BiRational g = (x / y).pow(-2);
    CHECK(g.eval(Rat(2), Rat(6)) == Rat(9));
}
