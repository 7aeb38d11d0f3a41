#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polybern/stirling.hpp"

using namespace polybern;

TEST_CASE("second-kind Stirling numbers match the alternating-sum formula") {
    // independent oracle: S(p,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^p
    for (unsigned p = 0; p <= 10; ++p)
        for (long k = 0; k <= static_cast<long>(p); ++k) {
            Rat expect(0);
            for (long j = 0; j <= k; ++j) {
                Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
                expect += sign * Rat(binomial(k, j)) * Rat(k - j).pow(p);
            }
            expect /= Rat(factorial(static_cast<unsigned long>(k)));
            CHECK(Rat(stirling2(p, k)) == expect);
        }
}

TEST_CASE("second-kind Stirling frozen values and edges") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(8, 4) == 1701);
    CHECK(stirling2(10, 5) == 42525);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(5, 6) == 0);
    CHECK(stirling2(5, -1) == 0);
    // row sums are Bell numbers
    long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (unsigned p = 0; p <= 8; ++p) {
        Int sum = 0;
        for (long k = 0; k <= static_cast<long>(p); ++k) sum += stirling2(p, k);
        CHECK(sum == bell[p]);
    }
}

TEST_CASE("first-kind unsigned Stirling numbers from the rising product") {
    MPoly x = MPoly::var("x");
    for (unsigned n = 0; n <= 8; ++n) {
        MPoly rp = rising_product(n, x);
        for (long k = 0; k <= static_cast<long>(n); ++k) {
            MPoly term = Rat(stirling1_unsigned(n, k)) * x.pow(static_cast<unsigned>(k));
            // extract coefficient by differencing
            rp -= term;
        }
        CHECK(rp == MPoly());
    }
    CHECK(stirling1_unsigned(4, 2) == 11);
    CHECK(stirling1_unsigned(5, 3) == 35);
    CHECK(stirling1_unsigned(5, 0) == 0);
    CHECK(stirling1_unsigned(0, 0) == 1);
    CHECK(stirling1_unsigned(5, 6) == 0);
    // row sums are factorials
    for (unsigned n = 1; n <= 8; ++n) {
        Int sum = 0;
        for (long k = 0; k <= static_cast<long>(n); ++k) sum += stirling1_unsigned(n, k);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("generalized family parameter validation") {
    CHECK_THROWS_AS(GsnParams(Rat(0), MPoly(), 1, Rat(1), MPoly(), 1), std::invalid_argument);
    CHECK_THROWS_AS(GsnParams(Rat(1), MPoly(), 1, Rat(0), MPoly(), 1), std::invalid_argument);
    CHECK_THROWS_AS(gsn_via_stirling_n(1, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("generalized family defining expansion") {
    // (a1 n + b1)^p1 (a2 n + b2)^p2 = sum_k k! S(p1,k) C(n,k) at n = 0..p1+p2+2
    GsnParams g(Rat(2), MPoly(Rat(1, 3)), 2, Rat(-1), MPoly(Rat(5, 2)), 3);
    for (long n = 0; n <= 7; ++n) {
        Rat lhs = (Rat(2) * Rat(n) + Rat(1, 3)).pow(2) * (Rat(-1) * Rat(n) + Rat(5, 2)).pow(3);
        Rat rhs(0);
        for (long k = 0; k <= 5; ++k)
            rhs += Rat(factorial(static_cast<unsigned long>(k)) * binomial(n, k)) *
                   gsn_explicit(g, k).as_rat();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("generalized family reduces to standard Stirling numbers") {
    for (unsigned p = 0; p <= 8; ++p)
        for (long k = 0; k <= static_cast<long>(p); ++k) {
            GsnParams g0(Rat(1), MPoly(), p, Rat(1), MPoly(), 0);  // b = 0
            CHECK(gsn_explicit(g0, k).as_rat() == Rat(stirling2(p, k)));
            GsnParams g1(Rat(1), MPoly(1L), p, Rat(1), MPoly(), 0);  // b = 1
            CHECK(gsn_explicit(g1, k).as_rat() == Rat(stirling2(p + 1, k + 1)));
            GsnParams g2(Rat(1), MPoly(2L), p, Rat(1), MPoly(), 0);  // b = 2
            CHECK(gsn_explicit(g2, k).as_rat() ==
                  Rat(stirling2(p + 2, k + 2) - stirling2(p + 1, k + 2)));
        }
}

TEST_CASE("symbolic family special values") {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    for (unsigned p1 = 0; p1 <= 4; ++p1)
        for (unsigned p2 = 0; p2 <= 4; ++p2) {
            CHECK(gsn_sym(p1, p2, 0) == x1.pow(p1) * x2.pow(p2));
            CHECK(gsn_sym(p1, p2, static_cast<long>(p1 + p2)) == MPoly(1L));
            CHECK(gsn_sym(p1, p2, -1) == MPoly());
            CHECK(gsn_sym(p1, p2, static_cast<long>(p1 + p2) + 1) == MPoly());
            if (p1 + p2 >= 1)
                CHECK(gsn_sym(p1, p2, 1) ==
                      (x1 + MPoly(1L)).pow(p1) * (x2 + MPoly(1L)).pow(p2) -
                          x1.pow(p1) * x2.pow(p2));
        }
}

TEST_CASE("equal-parameter collapse merges the degrees") {
    MPoly x = MPoly::var("x");
    for (unsigned p1 = 0; p1 <= 3; ++p1)
        for (unsigned p2 = 0; p2 <= 3; ++p2)
            for (long k = 0; k <= static_cast<long>(p1 + p2); ++k) {
                GsnParams both(Rat(1), x, p1, Rat(1), x, p2);
                GsnParams flat(Rat(1), x, p1 + p2, Rat(1), MPoly(), 0);
                CHECK(gsn_explicit(both, k) == gsn_explicit(flat, k));
            }
}

TEST_CASE("all computation routes agree on the symbolic family") {
    for (unsigned p1 = 0; p1 <= 4; ++p1)
        for (unsigned p2 = 0; p2 <= 4; ++p2)
            for (long k = -1; k <= static_cast<long>(p1 + p2) + 1; ++k) {
                MPoly base = gsn_sym(p1, p2, k);
                CHECK(base == gsn_recurrence(p1, p2, k));
                CHECK(base == gsn_change_basis(p1, p2, k, Rat(0), Rat(0)));
                CHECK(base == gsn_change_basis(p1, p2, k, Rat(1, 2), Rat(-3)));
                for (unsigned m = 0; m <= 2; ++m)
                    CHECK(base == gsn_via_stirling_m(p1, p2, k, m));
                for (unsigned n = 1; n <= 3; ++n)
                    CHECK(base == gsn_via_stirling_n(p1, p2, k, n));
            }
}

TEST_CASE("shift identity in both symbols") {
    for (unsigned p1 = 0; p1 <= 4; ++p1)
        for (unsigned p2 = 0; p2 <= 4; ++p2)
            for (long k = 0; k <= static_cast<long>(p1 + p2); ++k) {
                MPoly shifted = gsn_sym(p1, p2, k).subst(
                    {{"x1", MPoly::var("x1") + MPoly(1L)},
                     {"x2", MPoly::var("x2") + MPoly(1L)}});
                CHECK(shifted == gsn_sym(p1, p2, k) + Rat(k + 1) * gsn_sym(p1, p2, k + 1));
            }
}

TEST_CASE("weighted factorial sum has the shifted closed form") {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned p1 = 0; p1 <= 4; ++p1)
            for (unsigned p2 = 0; p2 <= 4; ++p2) {
                long s = -static_cast<long>(r) - 1;
                CHECK(gsn_factorial_sum(p1, p2, r) ==
                      Rat(factorial(r)) *
                          ((x1 + MPoly(s)).pow(p1) * (x2 + MPoly(s)).pow(p2)));
            }
}
