#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polybern/polybernoulli.hpp"

using namespace polybern;

TEST_CASE("classical Bernoulli numbers, frozen") {
    const char* expect[] = {"1", "-1/2", "1/6", "0", "-1/30", "0",
                            "1/42", "0", "-1/30", "0", "5/66"};
    for (unsigned p = 0; p <= 10; ++p) CHECK(bernoulli_number(p).str() == expect[p]);
}

TEST_CASE("poly-Bernoulli numbers at other k, frozen") {
    CHECK(pb_number(0, 2) == Rat(1));
    CHECK(pb_number(1, 2) == Rat(-1, 4));
    CHECK(pb_number(2, 2) == Rat(-1, 36));
    CHECK(pb_number(3, 2) == Rat(1, 24));
    CHECK(pb_number(0, 0) == Rat(1));
    CHECK(pb_number(3, 0) == Rat(-1));   // (x-1)^3 at x = 0
    CHECK(pb_number(2, -1) == Rat(4));   // (x-2)^2 at x = 0
    CHECK(pb_number(3, -1) == Rat(-8));
    CHECK(pb_number(2, -2) == Rat(14));  // -1*1!*2^2 + 1*2!*3^2 = -4 + 18
}

TEST_CASE("poly-Bernoulli number definition unrolled by hand") {
    // p = 2: S(2,0)=0, S(2,1)=1, S(2,2)=1 -> -1/2^k + 2/3^k
    for (long k = -3; k <= 4; ++k)
        CHECK(pb_number(2, k) == Rat(-1) * Rat(2).pow(-k) + Rat(2) * Rat(3).pow(-k));
}

TEST_CASE("one-variable polynomials, frozen") {
    MPoly x = MPoly::var("x");
    CHECK(pb_poly(0, 5) == MPoly(1L));
    CHECK(pb_poly(1, 2) == x - Rat(1, 4) * MPoly(1L));
    CHECK(pb_poly(2, 1) == x.pow(2) - x + Rat(1, 6) * MPoly(1L));
    CHECK(pb_poly(3, 1) == x.pow(3) - Rat(3, 2) * x.pow(2) + Rat(1, 2) * x);
    CHECK(pb_poly(2, 0) == (x - MPoly(1L)).pow(2));
    CHECK(pb_poly(3, -1) == (x - MPoly(2L)).pow(3));
}

TEST_CASE("k = 1 recovers the classical Bernoulli polynomials") {
    for (unsigned p = 0; p <= 8; ++p) CHECK(pb_poly(p, 1) == bernoulli_poly(p));
}

TEST_CASE("one-variable routes agree") {
    MPoly x = MPoly::var("x");
    for (unsigned p = 0; p <= 6; ++p)
        for (long k = -2; k <= 3; ++k) {
            CHECK(pb_poly(p, k) == pb_poly_gsn(p, k));
            CHECK(pb_poly(p, k) == pb_poly_at(p, k, x));
        }
}

TEST_CASE("composition with a polynomial argument equals substitution") {
    MPoly y = MPoly::var("y");
    MPoly u = Rat(2) * y + MPoly(1L);
    for (unsigned p = 0; p <= 5; ++p)
        for (long k = -1; k <= 2; ++k)
            CHECK(pb_poly_at(p, k, u) == pb_poly(p, k).subst({{"x", u}}));
}

TEST_CASE("bi-variate displayed examples, frozen") {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    for (long k = -2; k <= 4; ++k) {
        Rat i2 = Rat(2).pow(-k), i3 = Rat(3).pow(-k), i4 = Rat(4).pow(-k);
        CHECK(pb2(1, 1, k) ==
              Rat(2) * i3 * MPoly(1L) - i2 * (x1 + x2 + MPoly(1L)) + x1 * x2);
        CHECK(pb2(1, 2, k) ==
              i3 * (Rat(2) * x1 + Rat(4) * x2 + MPoly(6L)) -
                  i2 * (x1 * (Rat(2) * x2 + MPoly(1L)) + (x2 + MPoly(1L)).pow(2)) +
                  x1 * x2.pow(2) - Rat(6) * i4 * MPoly(1L));
    }
    CHECK(pb2(1, 1, 1).str() == "x1*x2 - 1/2*x1 - 1/2*x2 + 1/6");
}

TEST_CASE("bi-variate closed forms at k = 0 and k = -1") {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    for (unsigned p1 = 0; p1 <= 5; ++p1)
        for (unsigned p2 = 0; p2 <= 5; ++p2) {
            CHECK(pb2(p1, p2, 0) ==
                  (x1 - MPoly(1L)).pow(p1) * (x2 - MPoly(1L)).pow(p2));
            CHECK(pb2(p1, p2, -1) ==
                  (x1 - MPoly(2L)).pow(p1) * (x2 - MPoly(2L)).pow(p2));
        }
}

TEST_CASE("five bi-variate routes agree") {
    for (unsigned p1 = 0; p1 <= 3; ++p1)
        for (unsigned p2 = 0; p2 <= 3; ++p2)
            for (long k = -2; k <= 3; ++k) {
                MPoly base = pb2(p1, p2, k);
                CHECK(base == pb2(p1, p2, k, Pb2Route::Explicit));
                CHECK(base == pb2(p1, p2, k, Pb2Route::Numbers));
                for (unsigned m = 0; m <= 2; ++m)
                    CHECK(base == pb2(p1, p2, k, Pb2Route::StirlingM, m));
                for (unsigned n = 1; n <= 3; ++n)
                    CHECK(base == pb2(p1, p2, k, Pb2Route::StirlingN, n));
            }
}

TEST_CASE("diagonal, corners, edges, origin") {
    MPoly x = MPoly::var("x");
    for (unsigned p1 = 0; p1 <= 4; ++p1)
        for (unsigned p2 = 0; p2 <= 4; ++p2)
            for (long k = -1; k <= 2; ++k) {
                MPoly b = pb2(p1, p2, k);
                CHECK(b.subst({{"x1", x}, {"x2", x}}) == pb_poly(p1 + p2, k));
                CHECK(b.subst({{"x1", MPoly()}, {"x2", MPoly()}}).as_rat() ==
                      pb_number(p1 + p2, k));
                if (p2 == 0) CHECK(b == pb_poly(p1, k, "x1"));
                if (p1 == 0) CHECK(b == pb_poly(p2, k, "x2"));
            }
}

TEST_CASE("partial derivatives lower one degree") {
    for (unsigned p1 = 0; p1 <= 4; ++p1)
        for (unsigned p2 = 0; p2 <= 4; ++p2)
            for (long k = -1; k <= 2; ++k) {
                MPoly b = pb2(p1, p2, k);
                MPoly d1 = p1 ? Rat(static_cast<long>(p1)) * pb2(p1 - 1, p2, k) : MPoly();
                MPoly d2 = p2 ? Rat(static_cast<long>(p2)) * pb2(p1, p2 - 1, k) : MPoly();
                CHECK(b.diff("x1") == d1);
                CHECK(b.diff("x2") == d2);
            }
}

TEST_CASE("addition formula at symbolic and rational centers") {
    MPoly y = MPoly::var("y"), z = MPoly::var("z");
    for (unsigned p1 = 0; p1 <= 3; ++p1)
        for (unsigned p2 = 0; p2 <= 3; ++p2)
            for (long k = 0; k <= 2; ++k) {
                MPoly b = pb2(p1, p2, k);
                CHECK(b == pb2_addition(p1, p2, k, y, z));
                CHECK(b == pb2_addition(p1, p2, k, MPoly(Rat(1, 2)), MPoly(Rat(-2))));
            }
}

TEST_CASE("n-variate collapses and input validation") {
    MPoly x = MPoly::var("x");
    CHECK_THROWS_AS(pbn({}, 1), std::invalid_argument);
    for (long k = 0; k <= 2; ++k)
        for (unsigned p1 = 0; p1 <= 3; ++p1) {
            CHECK(pbn({p1}, k) == pb_poly(p1, k, "x1"));
            for (unsigned p2 = 0; p2 <= 3; ++p2) {
                CHECK(pbn({p1, p2}, k) == pb2(p1, p2, k));
                CHECK(pbn({p1, p2, 1}, k).subst({{"x1", x}, {"x2", x}, {"x3", x}}) ==
                      pb_poly(p1 + p2 + 1, k));
            }
        }
}
