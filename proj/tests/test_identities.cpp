#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polybern/suites.hpp"

using namespace polybern;

TEST_CASE("malformed transfer specs are rejected") {
    MPoly y = MPoly::var("y");
    // length mismatch
    CHECK_THROWS_AS(IdentitySpec({MPoly(1L)}, MPoly(), {MPoly(1L), MPoly(1L)}, MPoly()),
                    std::invalid_argument);
    // base identity false: 1 = 2
    CHECK_THROWS_AS(IdentitySpec({MPoly(1L)}, MPoly(), {MPoly(2L)}, MPoly()),
                    std::invalid_argument);
    // base identity false: x+y vs x
    CHECK_THROWS_AS(IdentitySpec({y, MPoly(1L)}, MPoly(), {MPoly(), MPoly(1L)}, MPoly()),
                    std::invalid_argument);
}

TEST_CASE("transfer operator on the two-center expansion spec") {
    MPoly y = MPoly::var("y"), z = MPoly::var("z");
    for (unsigned p = 0; p <= 4; ++p) {
        std::vector<MPoly> lc(p + 1), rc(p + 1);
        lc[p] = MPoly(1L);
        for (unsigned j = 0; j <= p; ++j) rc[j] = Rat(binomial(p, j)) * z.pow(p - j);
        IdentitySpec spec(lc, MPoly(), rc, -z);
        for (long k = -1; k <= 3; ++k) {
            auto res = verify_transfer(spec, k);
            CHECK(res.ok);
            CHECK(res.lhs == res.rhs);
        }
    }
    // a trivial spec is accepted and transfers
    IdentitySpec triv({y, MPoly(1L)}, y + z, {y, MPoly(1L)}, y + z);
    CHECK(verify_transfer(triv, 2).ok);
}

TEST_CASE("R-function base case, closed forms, and poles") {
    CHECK(r_function(-1, 7, Rat(3, 2)) == Rat(-1));
    CHECK_THROWS_AS(r_function(-2, 0, Rat(0)), std::invalid_argument);
    for (long k = -2; k <= 3; ++k)
        for (long y = 0; y <= 6; ++y) {
            Rat yr(y);
            CHECK(r_function(0, k, yr) ==
                  (yr + Rat(1)).pow(k + 1) - yr * (yr + Rat(2)).pow(k));
            CHECK(r_function(1, k, yr) ==
                  (Rat(2) * yr + Rat(1)) * (yr + Rat(1)).pow(k + 1) * (yr + Rat(3)).pow(k) -
                      yr.pow(2) * (yr + Rat(2)).pow(k) * (yr + Rat(3)).pow(k) -
                      (yr + Rat(1)).pow(k + 1) * (yr + Rat(2)).pow(k + 1));
        }
    for (long mu = -1; mu <= 4; ++mu) {
        Rat sign = (mu % 2 == 0) ? Rat(1) : Rat(-1);
        for (long y = 0; y <= 6; ++y) {
            CHECK(r_function(mu, 0, Rat(y)) == sign);
            Rat prod(1);
            for (long i = 2; i <= mu + 2; ++i) prod *= Rat(y + i);
            CHECK(r_function(mu, -1, Rat(y)) == sign * Rat(2).pow(mu + 1) / prod);
        }
    }
    // negative integer argument with k < 0 hits a zero base
    CHECK_THROWS_AS(r_function(0, -1, Rat(-2)), std::domain_error);
}

TEST_CASE("generalized recurrence with binomial weights") {
    for (unsigned p1 = 0; p1 <= 3; ++p1)
        for (unsigned p2 = 0; p2 <= 3; ++p2)
            for (unsigned q = 0; q <= 3; ++q)
                for (long k = -1; k <= 2; ++k) {
                    RecurrenceMembers m = gen_recurrence_A(p1, p2, q, k);
                    CHECK(m.agree());
                    if (q == 0) CHECK(m.lhs1 == pb2(p1, p2, k));
                }
}

TEST_CASE("generalized recurrence with derivative weights") {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    for (unsigned p1 = 0; p1 <= 3; ++p1)
        for (unsigned p2 = 0; p2 <= 3; ++p2)
            for (unsigned q = 0; q <= 3; ++q)
                for (long k = -1; k <= 2; ++k) {
                    RecurrenceMembers m = gen_recurrence_B(p1, p2, q, k);
                    CHECK(m.agree());
                    if (q == 0) CHECK(m.lhs1 == pb2(p1, p2, k));
                }
    // the q = 1 instance in its familiar difference form
    for (unsigned p1 = 0; p1 <= 3; ++p1)
        for (unsigned p2 = 0; p2 <= 3; ++p2)
            for (long k = -1; k <= 2; ++k)
                CHECK(pb2(p1, p2 + 1, k) - pb2(p1 + 1, p2, k) ==
                      (x2 - x1) * pb2(p1, p2, k));
}

TEST_CASE("binomial shift family") {
    for (unsigned p1 = 0; p1 <= 3; ++p1)
        for (unsigned p2 = 0; p2 <= 3; ++p2)
            for (unsigned q = 0; q <= 4; ++q)
                for (long k = -1; k <= 2; ++k)
                    CHECK(check_binomial_shift_family(p1, p2, q, k));
}

TEST_CASE("Carlitz symmetry, including the displayed value -1/3") {
    for (unsigned p1 = 0; p1 <= 4; ++p1)
        for (unsigned p2 = 0; p1 + p2 <= 8; ++p2) CHECK(carlitz_check(p1, p2));
    MPoly b = pb2(1, 1, 1);
    CHECK(b.subst({{"x1", MPoly(1L)}, {"x2", MPoly()}}).as_rat() == Rat(-1, 3));
    CHECK(b.subst({{"x1", MPoly()}, {"x2", MPoly(1L)}}).as_rat() == Rat(-1, 3));
}

TEST_CASE("empty grid yields an empty report") {
    CatalogConfig cfg;
    cfg.k_values.clear();
    SuiteReport rep = run_catalog(cfg);
    CHECK(rep.passed == 0);
    CHECK(rep.failed == 0);
    CHECK(rep.results.empty());
}

TEST_CASE("small-grid catalog run is all-pass") {
    CatalogConfig cfg;
    cfg.max_p = 2;
    cfg.q_values = {0, 1};
    cfg.k_values = {1};
    cfg.m_values = {0, 1};
    cfg.n_values = {1, 2};
    cfg.r_values = {0, 1};
    cfg.rational_samples = {Rat(0), Rat(2)};
    SuiteReport rep = run_catalog(cfg);
    CHECK(rep.failed == 0);
    CHECK(rep.passed > 0);
    CHECK(rep.all_passed());
}

TEST_CASE("failing checks carry both canonical renderings") {
    SuiteReport rep;
    MPoly x = MPoly::var("x");
    rep.record("demo", "p=1", x, x + MPoly(1L));
    CHECK(rep.failed == 1);
    CHECK(rep.results[0].lhs == "x");
    CHECK(rep.results[0].rhs == "x + 1");
    rep.record("demo", "p=2", x, x);
    CHECK(rep.passed == 1);
    CHECK(rep.results[1].lhs.empty());
}

TEST_CASE("every named suite runs clean on a trimmed grid") {
    CatalogConfig cfg;
    cfg.max_p = 2;
    cfg.q_values = {0, 1, 2};
    cfg.k_values = {0, 1, 2};
    cfg.m_values = {0, 1};
    cfg.n_values = {1, 2};
    cfg.r_values = {0, 1, 2};
    for (const auto& name : suite_names()) {
        SuiteReport rep = run_suite(name, cfg);
        INFO("suite ", name);
        CHECK(rep.failed == 0);
        CHECK(rep.passed > 0);
    }
    CHECK_THROWS_AS(run_suite("no-such-suite", cfg), std::invalid_argument);
}
