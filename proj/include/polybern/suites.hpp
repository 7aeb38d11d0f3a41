#ifndef POLYBERN_SUITES_HPP
#define POLYBERN_SUITES_HPP

#include "polybern/catalog.hpp"

namespace polybern {

// ---------------------------------------------------------------------------
// Named verification suites beyond the identity catalog: structural laws of
// the generalized Stirling family, the bi-variate polynomials, the
// generalized recurrences, and the n-variate extension.
// ---------------------------------------------------------------------------

namespace suites {

using detail::pstr;
using detail::record_chain;
using detail::sgn;

inline void gsn_suite(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2"), x = MPoly::var("x");
    // defining expansion: (m+b1)^p1 (m+b2)^p2 = sum_k k! S(p1,k) C(m,k),
    // symbolically in (x1, x2) and for a rational (a2=2, b) family
    for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
        for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
            for (unsigned m = 0; m <= p1 + p2 + 2; ++m) {
                MPoly mm(static_cast<long>(m));
                MPoly lhs = (mm + x1).pow(p1) * (mm + x2).pow(p2);
                MPoly rhs;
                for (unsigned k = 0; k <= p1 + p2; ++k)
                    rhs += Rat(factorial(k) * binomial(m, static_cast<long>(k))) *
                           gsn_sym(p1, p2, static_cast<long>(k));
                rep.record("gsn/expansion", pstr("p1=", p1, " p2=", p2, " m=", m), lhs, rhs);
            }
            for (const Rat& b : cfg.rational_samples)
                for (unsigned m = 0; m <= p1 + p2 + 2; ++m) {
                    GsnParams g(Rat(1), MPoly(b), p1, Rat(2), MPoly(b), p2);
                    Rat mv(static_cast<long>(m));
                    Rat lhs = (mv + b).pow(p1) * (Rat(2) * mv + b).pow(p2);
                    Rat rhs(0);
                    for (unsigned k = 0; k <= p1 + p2; ++k)
                        rhs += Rat(factorial(k) * binomial(m, static_cast<long>(k))) *
                               gsn_explicit(g, static_cast<long>(k)).as_rat();
                    rep.record("gsn/expansion-rational",
                               pstr("p1=", p1, " p2=", p2, " m=", m, " b=", b.str()), lhs, rhs);
                }
        }
    // special values at k = 0, 1, p1+p2, and out of range
    for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
        for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
            std::string ps = pstr("p1=", p1, " p2=", p2);
            rep.record("gsn/value-k0", ps, gsn_sym(p1, p2, 0), x1.pow(p1) * x2.pow(p2));
            if (p1 + p2 >= 1)
                rep.record("gsn/value-k1", ps, gsn_sym(p1, p2, 1),
                           (x1 + MPoly(1L)).pow(p1) * (x2 + MPoly(1L)).pow(p2) -
                               x1.pow(p1) * x2.pow(p2));
            rep.record("gsn/value-top", ps, gsn_sym(p1, p2, static_cast<long>(p1 + p2)),
                       MPoly(1L));
            rep.record("gsn/value-below", ps, gsn_sym(p1, p2, -1), MPoly());
            rep.record("gsn/value-above", ps,
                       gsn_sym(p1, p2, static_cast<long>(p1 + p2) + 1), MPoly());
        }
    // reductions to standard Stirling numbers at b = 1 and b = 2, p <= 8
    for (unsigned p = 0; p <= 8; ++p)
        for (unsigned k = 0; k <= p; ++k) {
            GsnParams g1(Rat(1), MPoly(1L), p, Rat(1), MPoly(), 0);
            rep.record("gsn/reduce-b1", pstr("p=", p, " k=", k),
                       gsn_explicit(g1, static_cast<long>(k)).as_rat(),
                       Rat(stirling2(p + 1, static_cast<long>(k) + 1)));
            GsnParams g2(Rat(1), MPoly(2L), p, Rat(1), MPoly(), 0);
            rep.record("gsn/reduce-b2", pstr("p=", p, " k=", k),
                       gsn_explicit(g2, static_cast<long>(k)).as_rat(),
                       Rat(stirling2(p + 2, static_cast<long>(k) + 2) -
                           stirling2(p + 1, static_cast<long>(k) + 2)));
        }
    // equal-parameter collapse S_{a,b}^{a,b,p2}(p1,k) = S_{a,b}(p1+p2,k)
    for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
        for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2)
            for (unsigned k = 0; k <= p1 + p2; ++k) {
                GsnParams both(Rat(1), x, p1, Rat(1), x, p2);
                GsnParams flat(Rat(1), x, p1 + p2, Rat(1), MPoly(), 0);
                rep.record("gsn/collapse", pstr("p1=", p1, " p2=", p2, " k=", k),
                           gsn_explicit(both, static_cast<long>(k)),
                           gsn_explicit(flat, static_cast<long>(k)));
            }
    // route equivalence: recurrence, change of basis, the two Stirling routes
    for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
        for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2)
            for (long k = -1; k <= static_cast<long>(p1 + p2) + 1; ++k) {
                MPoly base = gsn_sym(p1, p2, k);
                std::string ps = pstr("p1=", p1, " p2=", p2, " k=", k);
                rep.record("gsn/route-recurrence", ps, base, gsn_recurrence(p1, p2, k));
                for (const Rat& y : cfg.rational_samples)
                    rep.record("gsn/route-basis", ps + " y=" + y.str(), base,
                               gsn_change_basis(p1, p2, k, y, y + Rat(1)));
                for (unsigned m : cfg.m_values)
                    rep.record("gsn/route-stirling-m", ps + pstr(" m=", m), base,
                               gsn_via_stirling_m(p1, p2, k, m));
                for (unsigned n : cfg.n_values)
                    rep.record("gsn/route-stirling-n", ps + pstr(" n=", n), base,
                               gsn_via_stirling_n(p1, p2, k, n));
            }
    // shift identity S(x+1; k) = S(x; k) + (k+1) S(x; k+1)
    for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
        for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2)
            for (unsigned k = 0; k <= p1 + p2; ++k) {
                MPoly shifted = gsn_sym(p1, p2, static_cast<long>(k))
                                    .subst({{"x1", x1 + MPoly(1L)}, {"x2", x2 + MPoly(1L)}});
                MPoly rhs = gsn_sym(p1, p2, static_cast<long>(k)) +
                            Rat(static_cast<long>(k) + 1) *
                                gsn_sym(p1, p2, static_cast<long>(k) + 1);
                rep.record("gsn/shift", pstr("p1=", p1, " p2=", p2, " k=", k), shifted, rhs);
            }
    // weighted factorial sum closed form r!(x1-r-1)^p1 (x2-r-1)^p2
    for (unsigned r : cfg.r_values)
        for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
            for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                long s = -static_cast<long>(r) - 1;
                MPoly closed = Rat(factorial(r)) *
                               ((x1 + MPoly(s)).pow(p1) * (x2 + MPoly(s)).pow(p2));
                rep.record("gsn/factorial-sum", pstr("p1=", p1, " p2=", p2, " r=", r),
                           gsn_factorial_sum(p1, p2, r), closed);
            }
}

inline void pb2_suite(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2"), x = MPoly::var("x");
    MPoly y = MPoly::var("y"), z = MPoly::var("z");
    for (long k : cfg.k_values) {
        // the two displayed low-degree polynomials
        Rat i2 = Rat(2).pow(-k), i3 = Rat(3).pow(-k), i4 = Rat(4).pow(-k);
        MPoly d11 = Rat(2) * i3 * MPoly(1L) - i2 * (x1 + x2 + MPoly(1L)) + x1 * x2;
        rep.record("pb2/display-11", pstr("k=", k), pb2(1, 1, k), d11);
        MPoly d12 = i3 * (Rat(2) * x1 + Rat(4) * x2 + MPoly(6L)) -
                    i2 * (x1 * (Rat(2) * x2 + MPoly(1L)) + (x2 + MPoly(1L)).pow(2)) +
                    x1 * x2.pow(2) - Rat(6) * i4 * MPoly(1L);
        rep.record("pb2/display-12", pstr("k=", k), pb2(1, 2, k), d12);
        rep.record("pb2/unit", pstr("k=", k), pb2(0, 0, k), MPoly(1L));
    }
    // closed forms at k = 0 and k = -1
    for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
        for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
            std::string ps = pstr("p1=", p1, " p2=", p2);
            rep.record("pb2/closed-k0", ps, pb2(p1, p2, 0),
                       (x1 - MPoly(1L)).pow(p1) * (x2 - MPoly(1L)).pow(p2));
            rep.record("pb2/closed-km1", ps, pb2(p1, p2, -1),
                       (x1 - MPoly(2L)).pow(p1) * (x2 - MPoly(2L)).pow(p2));
        }
    for (long k : cfg.k_values)
        for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
            for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                std::string ps = pstr("p1=", p1, " p2=", p2, " k=", k);
                MPoly base = pb2(p1, p2, k);
                // five-route equivalence
                rep.record("pb2/route-explicit", ps, base, pb2(p1, p2, k, Pb2Route::Explicit));
                rep.record("pb2/route-numbers", ps, base, pb2(p1, p2, k, Pb2Route::Numbers));
                for (unsigned m : cfg.m_values)
                    rep.record("pb2/route-stirling-m", ps + pstr(" m=", m), base,
                               pb2(p1, p2, k, Pb2Route::StirlingM, m));
                for (unsigned n : cfg.n_values)
                    rep.record("pb2/route-stirling-n", ps + pstr(" n=", n), base,
                               pb2(p1, p2, k, Pb2Route::StirlingN, n));
                // diagonal collapse and value at the origin
                rep.record("pb2/diagonal", ps, base.subst({{"x1", x}, {"x2", x}}),
                           pb_poly(p1 + p2, k));
                rep.record("pb2/origin", ps,
                           base.subst({{"x1", MPoly()}, {"x2", MPoly()}}).as_rat(),
                           pb_number(p1 + p2, k));
                // corners and edges
                if (p2 == 0)
                    rep.record("pb2/corner-1", ps, base, pb_poly(p1, k, "x1"));
                if (p1 == 0)
                    rep.record("pb2/corner-2", ps, base, pb_poly(p2, k, "x2"));
                MPoly edge1, edge2;
                for (unsigned j2 = 0; j2 <= p2; ++j2)
                    edge1 += Rat(binomial(p2, j2)) * pb_number(p1 + j2, k) * x2.pow(p2 - j2);
                for (unsigned j1 = 0; j1 <= p1; ++j1)
                    edge2 += Rat(binomial(p1, j1)) * pb_number(j1 + p2, k) * x1.pow(p1 - j1);
                rep.record("pb2/edge-x1-0", ps, base.subst({{"x1", MPoly()}}), edge1);
                rep.record("pb2/edge-x2-0", ps, base.subst({{"x2", MPoly()}}), edge2);
                // partial derivatives
                MPoly d1 = p1 > 0 ? Rat(static_cast<long>(p1)) * pb2(p1 - 1, p2, k) : MPoly();
                MPoly d2 = p2 > 0 ? Rat(static_cast<long>(p2)) * pb2(p1, p2 - 1, k) : MPoly();
                rep.record("pb2/diff-x1", ps, base.diff("x1"), d1);
                rep.record("pb2/diff-x2", ps, base.diff("x2"), d2);
                // addition formula at symbolic and rational centers
                rep.record("pb2/addition-sym", ps, base, pb2_addition(p1, p2, k, y, z));
                for (const Rat& c : cfg.rational_samples)
                    rep.record("pb2/addition-rat", ps + " c=" + c.str(), base,
                               pb2_addition(p1, p2, k, MPoly(c), MPoly(c + Rat(1))));
                // binomial formula B(x1+1, x2+1) = sum C C B_{j1,j2}
                MPoly shifted =
                    base.subst({{"x1", x1 + MPoly(1L)}, {"x2", x2 + MPoly(1L)}});
                MPoly binsum;
                for (unsigned j1 = 0; j1 <= p1; ++j1)
                    for (unsigned j2 = 0; j2 <= p2; ++j2)
                        binsum += Rat(binomial(p1, j1) * binomial(p2, j2)) * pb2(j1, j2, k);
                rep.record("pb2/binomial", ps, shifted, binsum);
                // recombination of the one-variable polynomial from bi-variate
                // values at a symbolic center pair
                MPoly recomb;
                for (unsigned j1 = 0; j1 <= p1; ++j1)
                    for (unsigned j2 = 0; j2 <= p2; ++j2)
                        recomb += Rat(binomial(p1, j1) * binomial(p2, j2)) *
                                  ((x - y).pow(p1 - j1) * (x - z).pow(p2 - j2) *
                                   pb2(j1, j2, k).subst({{"x1", y}, {"x2", z}}));
                rep.record("pb2/recombination", ps, pb_poly(p1 + p2, k), recomb);
            }
    // one-variable route agreement and the classical reflection law
    for (long k : cfg.k_values)
        for (unsigned p = 0; p <= cfg.max_p + 2; ++p) {
            rep.record("pb/route-gsn", pstr("p=", p, " k=", k), pb_poly(p, k),
                       pb_poly_gsn(p, k));
            rep.record("pb/route-numbers", pstr("p=", p, " k=", k), pb_poly(p, k),
                       pb_poly_at(p, k, x));
        }
    for (unsigned r = 0; r <= 10; ++r) {
        MPoly refl = pb_poly_at(r, 1, MPoly(1L) - x);
        rep.record("bernoulli/reflection", pstr("r=", r), refl,
                   detail::sgn(r) * pb_poly(r, 1));
        MPoly stepped = pb_poly_at(r, 1, x + MPoly(1L));
        MPoly binsum;
        for (unsigned j = 0; j <= r; ++j)
            binsum += Rat(binomial(r, j)) * pb_poly(j, 1);
        rep.record("bernoulli/step", pstr("r=", r), stepped, binsum);
    }
}

inline void recurrence_suite(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    // closed forms of the R family
    for (long k : cfg.k_values)
        for (long yv = 0; yv <= 6; ++yv) {
            Rat yr(yv);
            rep.record("rfun/mu0", pstr("k=", k, " y=", yv), r_function(0, k, yr),
                       (yr + Rat(1)).pow(k + 1) - yr * (yr + Rat(2)).pow(k));
            Rat r1 = (Rat(2) * yr + Rat(1)) * (yr + Rat(1)).pow(k + 1) * (yr + Rat(3)).pow(k) -
                     yr.pow(2) * (yr + Rat(2)).pow(k) * (yr + Rat(3)).pow(k) -
                     (yr + Rat(1)).pow(k + 1) * (yr + Rat(2)).pow(k + 1);
            rep.record("rfun/mu1", pstr("k=", k, " y=", yv), r_function(1, k, yr), r1);
        }
    for (long mu = -1; mu <= 4; ++mu)
        for (long yv = 0; yv <= 6; ++yv) {
            Rat yr(yv);
            rep.record("rfun/k0", pstr("mu=", mu, " y=", yv), r_function(mu, 0, yr),
                       mu % 2 == 0 ? Rat(1) : Rat(-1));
            Rat prod(1);
            for (long i = 2; i <= mu + 2; ++i) prod *= yr + Rat(i);
            Rat closed = (mu % 2 == 0 ? Rat(1) : Rat(-1)) * Rat(2).pow(mu + 1) / prod;
            rep.record("rfun/km1", pstr("mu=", mu, " y=", yv), r_function(mu, -1, yr), closed);
        }
    for (long k : cfg.k_values)
        for (unsigned q : cfg.q_values)
            for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                    std::string ps = pstr("p1=", p1, " p2=", p2, " q=", q, " k=", k);
                    RecurrenceMembers a = gen_recurrence_A(p1, p2, q, k);
                    rep.record("recA/lhs1-lhs2", ps, a.lhs1, a.lhs2);
                    rep.record("recA/lhs2-rhs", ps, a.lhs2, a.rhs);
                    if (q == 0) rep.record("recA/q0", ps, a.lhs1, pb2(p1, p2, k));
                    if (k == 0)
                        rep.record("recA/k0-closed", ps, a.rhs,
                                   sgn(q) * ((x1 - MPoly(1L)).pow(p1) *
                                             (x2 - MPoly(1L)).pow(p2)));
                    if (k == -1)
                        rep.record("recA/km1-closed", ps, a.rhs,
                                   Rat(-2).pow(static_cast<long>(q)) *
                                       ((x1 - MPoly(2L)).pow(p1) * (x2 - MPoly(2L)).pow(p2)));
                    RecurrenceMembers b = gen_recurrence_B(p1, p2, q, k);
                    rep.record("recB/lhs1-lhs2", ps, b.lhs1, b.lhs2);
                    rep.record("recB/lhs2-rhs", ps, b.lhs2, b.rhs);
                    if (q == 0) rep.record("recB/q0", ps, b.lhs1, pb2(p1, p2, k));
                    if (q == 1)
                        rep.record("recB/q1-step", ps,
                                   pb2(p1, p2 + 1, k) - pb2(p1 + 1, p2, k),
                                   (x2 - x1) * pb2(p1, p2, k));
                    // shift family and its corner specialization
                    rep.record_flag("shift/binomial-family", ps,
                                    check_binomial_shift_family(p1, p2, q, k));
                    if (p1 == 0 && p2 == 0) {
                        MPoly alt;
                        for (unsigned j = 0; j <= q; ++j)
                            alt += (sgn(j) * Rat(binomial(q, j))) * pb2(j, q - j, k);
                        rep.record("shift/corner", ps, alt, (x2 - x1).pow(q));
                    }
                    // step identity iterated q times rebuilds the direct value
                    if (q > 0) {
                        std::vector<MPoly> row;
                        for (unsigned i = 0; i <= q; ++i) row.push_back(pb2(p1 + i, p2, k));
                        MPoly d = x2 - x1;
                        for (unsigned t = 0; t < q; ++t) {
                            std::vector<MPoly> next;
                            for (size_t i = 0; i + 1 < row.size(); ++i)
                                next.push_back(row[i + 1] + d * row[i]);
                            row = std::move(next);
                        }
                        rep.record("shift/iterated-step", ps, row[0], pb2(p1, p2 + q, k));
                    }
                }
    // Carlitz symmetry across the whole p1 + p2 range
    for (unsigned p1 = 0; p1 <= 2 * cfg.max_p; ++p1)
        for (unsigned p2 = 0; p1 + p2 <= 2 * cfg.max_p; ++p2)
            rep.record_flag("carlitz", pstr("p1=", p1, " p2=", p2), carlitz_check(p1, p2));
}

inline void nvariate_suite(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x = MPoly::var("x"), x1 = MPoly::var("x1"), x3 = MPoly::var("x3");
    for (long k : cfg.k_values)
        for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1) {
            rep.record("pbn/collapse-1", pstr("p=", p1, " k=", k), pbn({p1}, k),
                       pb_poly(p1, k, "x1"));
            for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                std::string ps = pstr("p1=", p1, " p2=", p2, " k=", k);
                rep.record("pbn/collapse-2", ps, pbn({p1, p2}, k), pb2(p1, p2, k));
                rep.record("pbn/diagonal-3", ps,
                           pbn({p1, p2, p2}, k).subst({{"x1", x}, {"x2", x}, {"x3", x}}),
                           pb_poly(p1 + 2 * p2, k));
                // a zero middle degree drops the middle variable
                rep.record("pbn/degenerate-mid", ps, pbn({p1, 0, p2}, k),
                           pb2(p1, p2, k).subst({{"x1", x1}, {"x2", x3}}));
            }
        }
    entries::three_var_entry(cfg, rep);
}

}  // namespace suites

/// Suite registry for the verification front end.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"gsn", "pb2", "identities", "recurrences",
                                                   "nvariate"};
    return names;
}

/// Runs one named suite; "identities" is the full catalog. Throws
/// std::invalid_argument for an unknown name.
inline SuiteReport run_suite(const std::string& name, const CatalogConfig& cfg) {
    SuiteReport rep;
    if (name == "gsn")
        suites::gsn_suite(cfg, rep);
    else if (name == "pb2")
        suites::pb2_suite(cfg, rep);
    else if (name == "identities")
        rep = run_catalog(cfg);
    else if (name == "recurrences")
        suites::recurrence_suite(cfg, rep);
    else if (name == "nvariate")
        suites::nvariate_suite(cfg, rep);
    else
        throw std::invalid_argument("unknown suite: " + name);
    return rep;
}

/// Every registered suite in order.
inline SuiteReport run_all_suites(const CatalogConfig& cfg) {
    SuiteReport rep;
    for (const auto& n : suite_names()) {
        SuiteReport r = run_suite(n, cfg);
        rep.passed += r.passed;
        rep.failed += r.failed;
        for (auto& c : r.results) rep.results.push_back(std::move(c));
    }
    return rep;
}

}  // namespace polybern

#endif
