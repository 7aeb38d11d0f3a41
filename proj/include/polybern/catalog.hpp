#ifndef POLYBERN_CATALOG_HPP
#define POLYBERN_CATALOG_HPP

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polybern/identities.hpp"

namespace polybern {

/// Parameter grid for a catalog run. The defaults are the acceptance grid;
/// clearing k_values empties every entry.
struct CatalogConfig {
    unsigned max_p = 3;
    std::vector<unsigned> q_values{0, 1, 2, 3};
    std::vector<long> k_values{0, 1, 2};
    std::vector<unsigned> m_values{0, 1, 2};
    std::vector<unsigned> n_values{1, 2, 3};
    std::vector<unsigned> r_values{0, 1, 2, 3};
    std::vector<Rat> rational_samples{Rat(0), Rat(1), Rat(2), Rat(3), Rat(-1, 2)};
};

struct CheckResult {
    std::string name;
    std::string params;
    bool pass;
    std::string lhs;  // canonical renderings, filled on failure
    std::string rhs;
};

/// Accumulated pass/fail record of a suite run. Failures keep both sides'
/// canonical forms for diffing.
struct SuiteReport {
    std::vector<CheckResult> results;
    unsigned passed = 0;
    unsigned failed = 0;

    bool all_passed() const { return failed == 0; }

    void record(const std::string& name, const std::string& params, const MPoly& l,
                const MPoly& r) {
        bool ok = l == r;
        ok ? ++passed : ++failed;
        results.push_back({name, params, ok, ok ? "" : l.str(), ok ? "" : r.str()});
    }
    void record(const std::string& name, const std::string& params, const Rat& l, const Rat& r) {
        bool ok = l == r;
        ok ? ++passed : ++failed;
        results.push_back({name, params, ok, ok ? "" : l.str(), ok ? "" : r.str()});
    }
    void record_flag(const std::string& name, const std::string& params, bool ok) {
        ok ? ++passed : ++failed;
        results.push_back({name, params, ok, "", ""});
    }
};

namespace detail {

inline MPoly pbp(unsigned r, long k, const MPoly& u) { return pb_poly_at(r, k, u); }
inline MPoly bern_at(unsigned n, const MPoly& u) { return pb_poly_at(n, 1, u); }
inline Rat sgn(unsigned i) { return i % 2 == 0 ? Rat(1) : Rat(-1); }

template <class... Ts>
std::string pstr(Ts&&... parts) {
    std::ostringstream os;
    ((os << parts), ...);
    return os.str();
}

// Checks every member of a chain against the first.
template <class T>
void record_chain(SuiteReport& rep, const std::string& name, const std::string& params,
                  const std::vector<T>& members) {
    for (size_t i = 1; i < members.size(); ++i)
        rep.record(name, pstr(params, " member=", i), members[0], members[i]);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog entries. Each covers one named identity family over the config grid.
// ---------------------------------------------------------------------------

namespace entries {

using namespace detail;

// Registered transfer specs exercised through verify_transfer directly.
inline void transfer_specs(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly y = MPoly::var("y"), z = MPoly::var("z");
    for (long k : cfg.k_values) {
        for (unsigned p = 0; p <= cfg.max_p; ++p) {
            // u^p expanded around z:  u^p = sum_j C(p,j)(u-z)^j z^{p-j}
            std::vector<MPoly> lc(p + 1), rc(p + 1);
            lc[p] = MPoly(1L);
            for (unsigned j = 0; j <= p; ++j) rc[j] = Rat(binomial(p, j)) * z.pow(p - j);
            IdentitySpec spec(lc, MPoly(), rc, -z);
            auto res = verify_transfer(spec, k);
            rep.record_flag("transfer/addition-spec", pstr("p=", p, " k=", k), res.ok);

            // two-center expansion: sum C(p,j)(y-...)^... around y vs around z
            std::vector<MPoly> yc(p + 1), zc(p + 1);
            for (unsigned j = 0; j <= p; ++j) {
                yc[j] = Rat(binomial(p, j)) * y.pow(p - j);
                zc[j] = Rat(binomial(p, j)) * z.pow(p - j);
            }
            IdentitySpec two(yc, -y, zc, -z);
            auto res2 = verify_transfer(two, k);
            rep.record_flag("transfer/two-center-spec", pstr("p=", p, " k=", k), res2.ok);
        }
        // degree-0 spec: 1 = 1
        IdentitySpec triv({MPoly(1L)}, y, {MPoly(1L)}, y);
        rep.record_flag("transfer/constant-spec", pstr("k=", k), verify_transfer(triv, k).ok);
    }
}

// Addition formula and its number form.
inline void addition_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x = MPoly::var("x"), y = MPoly::var("y");
    for (long k : cfg.k_values)
        for (unsigned p = 0; p <= cfg.max_p; ++p) {
            MPoly rhs;
            for (unsigned j = 0; j <= p; ++j)
                rhs += Rat(binomial(p, j)) * ((x - y).pow(p - j) * pbp(j, k, y));
            rep.record("addition/polynomial", pstr("p=", p, " k=", k), pb_poly(p, k), rhs);
            MPoly numform;
            for (unsigned j = 0; j <= p; ++j)
                numform += Rat(binomial(p, j)) * pb_number(j, k) * x.pow(p - j);
            rep.record("addition/numbers-form", pstr("p=", p, " k=", k), numform, rhs);
        }
}

// Product-of-two-families transfer and its diagonal.
inline void product_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x = MPoly::var("x"), y = MPoly::var("y");
    for (long k1 : cfg.k_values)
        for (long k : cfg.k_values)
            for (unsigned p = 0; p <= cfg.max_p; ++p) {
                MPoly a, b, c;
                for (unsigned j = 0; j <= p; ++j) {
                    Rat bc(binomial(p, j));
                    a += bc * pb_number(j, k) * pb_poly(p - j, k1);
                    b += bc * (pbp(p - j, k1, x - y) * pbp(j, k, y));
                    c += bc * pb_number(p - j, k1) * pb_poly(j, k);
                }
                rep.record("product/center-split", pstr("p=", p, " k1=", k1, " k=", k), a, b);
                rep.record("product/symmetric", pstr("p=", p, " k1=", k1, " k=", k), a, c);
            }
}

// Bernoulli-number cross sums and the telescoped derivative identity.
inline void bernoulli_cross_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x = MPoly::var("x");
    for (long k1 : cfg.k_values)
        for (unsigned p = 0; p <= cfg.max_p; ++p) {
            MPoly a, b, d;
            for (unsigned j = 0; j <= p; ++j) {
                Rat bc(binomial(p, j));
                a += bc * bernoulli_number(j) * pbp(p - j, k1, x + MPoly(1L));
                b += bc * pb_number(p - j, k1) * bern_at(j, x + MPoly(1L));
                d += bc * bernoulli_number(j) *
                     (pbp(p - j, k1, x + MPoly(1L)) - pb_poly(p - j, k1));
            }
            rep.record("bernoulli-cross/symmetric", pstr("p=", p, " k1=", k1), a, b);
            MPoly rhs = p == 0 ? MPoly() : Rat(static_cast<long>(p)) * pb_poly(p - 1, k1);
            rep.record("bernoulli-cross/telescoped", pstr("p=", p, " k1=", k1), d, rhs);
        }
}

// Triple Stirling expansions, symbolic and bernoullified at x1=x2=m+n.
inline void stirling_triple_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    for (long k0 : cfg.k_values)
        for (unsigned m : cfg.m_values)
            for (unsigned n : cfg.n_values)
                for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                    for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                        MPoly a, b, c;
                        for (unsigned j1 = 0; j1 <= p1; ++j1)
                            for (unsigned j2 = 0; j2 <= p2; ++j2) {
                                Rat bc(binomial(p1, j1) * binomial(p2, j2));
                                Rat wa(0), wb(0), wc(0);
                                for (unsigned l = 0; l <= j1 + j2; ++l) {
                                    Rat base = sgn(l) * Rat(static_cast<long>(l) + 1).pow(-k0);
                                    wa += base * Rat(factorial(l) * stirling2(j1 + j2, l));
                                    for (unsigned i = 0; i <= m; ++i)
                                        wb += base * Rat(binomial(m, i) * factorial(l + i) *
                                                         stirling2(j1 + j2, l + i));
                                    for (unsigned i = 0; i < n; ++i)
                                        wc += base * sgn(i) * Rat(factorial(l)) *
                                              Rat(stirling1_unsigned(n, n - i) *
                                                  stirling2(j1 + j2 + n - i, l + n));
                                }
                                a += (bc * wa) * (x1.pow(p1 - j1) * x2.pow(p2 - j2));
                                MPoly sm1 = x1 - MPoly(static_cast<long>(m));
                                MPoly sm2 = x2 - MPoly(static_cast<long>(m));
                                b += (bc * wb) * (sm1.pow(p1 - j1) * sm2.pow(p2 - j2));
                                MPoly sn1 = x1 - MPoly(static_cast<long>(n));
                                MPoly sn2 = x2 - MPoly(static_cast<long>(n));
                                c += (bc * wc) * (sn1.pow(p1 - j1) * sn2.pow(p2 - j2));
                            }
                        std::string ps = pstr("p1=", p1, " p2=", p2, " k0=", k0, " m=", m,
                                              " n=", n);
                        record_chain(rep, "stirling-triple/symbolic", ps, std::vector<MPoly>{a, b, c});
                    }
    for (long k0 : cfg.k_values)
        for (long k1 : cfg.k_values)
            for (long k2 : cfg.k_values)
                for (unsigned m : cfg.m_values)
                    for (unsigned n : cfg.n_values)
                        for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                            for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                                long mn = static_cast<long>(m + n);
                                Rat a(0), b(0), c(0);
                                for (unsigned j1 = 0; j1 <= p1; ++j1)
                                    for (unsigned j2 = 0; j2 <= p2; ++j2) {
                                        Rat bc(binomial(p1, j1) * binomial(p2, j2));
                                        Rat fmn =
                                            pbp(p1 - j1, k1, MPoly(mn)).as_rat() *
                                            pbp(p2 - j2, k2, MPoly(mn)).as_rat();
                                        Rat fn = pbp(p1 - j1, k1, MPoly((long)n)).as_rat() *
                                                 pbp(p2 - j2, k2, MPoly((long)n)).as_rat();
                                        Rat fm = pbp(p1 - j1, k1, MPoly((long)m)).as_rat() *
                                                 pbp(p2 - j2, k2, MPoly((long)m)).as_rat();
                                        for (unsigned l = 0; l <= j1 + j2; ++l) {
                                            Rat base =
                                                sgn(l) * Rat(static_cast<long>(l) + 1).pow(-k0);
                                            a += bc * fmn * base *
                                                 Rat(factorial(l) * stirling2(j1 + j2, l));
                                            for (unsigned i = 0; i <= m; ++i)
                                                b += bc * fn * base *
                                                     Rat(binomial(m, i) * factorial(l + i) *
                                                         stirling2(j1 + j2, l + i));
                                            for (unsigned i = 0; i < n; ++i)
                                                c += bc * fm * base * sgn(i) * Rat(factorial(l)) *
                                                     Rat(stirling1_unsigned(n, n - i) *
                                                         stirling2(j1 + j2 + n - i, l + n));
                                        }
                                    }
                                std::string ps = pstr("p1=", p1, " p2=", p2, " k0=", k0, " k1=",
                                                      k1, " k2=", k2, " m=", m, " n=", n);
                                record_chain(rep, "stirling-triple/specialized", ps, std::vector<Rat>{a, b, c});
                            }
}

// Center-independence of the one-variable expansion, bernoullified, and its
// diagonal x1=x2=y=x.
inline void center_free_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z");
    for (long k0 : cfg.k_values)
        for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
            for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                MPoly ly, lz;
                for (unsigned j1 = 0; j1 <= p1; ++j1)
                    for (unsigned j2 = 0; j2 <= p2; ++j2) {
                        Rat bc(binomial(p1, j1) * binomial(p2, j2));
                        ly += bc * ((x1 - y).pow(p1 - j1) * (x2 - y).pow(p2 - j2) *
                                    pbp(j1 + j2, k0, y));
                        lz += bc * ((x1 - z).pow(p1 - j1) * (x2 - z).pow(p2 - j2) *
                                    pbp(j1 + j2, k0, z));
                    }
                rep.record("center-free/plain", pstr("p1=", p1, " p2=", p2, " k0=", k0), ly, lz);
            }
    for (long k0 : cfg.k_values)
        for (long k1 : cfg.k_values)
            for (long k2 : cfg.k_values)
                for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                    for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                        MPoly ly, lz, diag, dz;
                        for (unsigned j1 = 0; j1 <= p1; ++j1)
                            for (unsigned j2 = 0; j2 <= p2; ++j2) {
                                Rat bc(binomial(p1, j1) * binomial(p2, j2));
                                ly += bc * (pbp(p1 - j1, k1, x1 - y) * pbp(p2 - j2, k2, x2 - y) *
                                            pbp(j1 + j2, k0, y));
                                lz += bc * (pbp(p1 - j1, k1, x1 - z) * pbp(p2 - j2, k2, x2 - z) *
                                            pbp(j1 + j2, k0, z));
                                diag += bc * pb_number(p1 - j1, k1) * pb_number(p2 - j2, k2) *
                                        pbp(j1 + j2, k0, x);
                                dz += bc * (pbp(p1 - j1, k1, x - z) * pbp(p2 - j2, k2, x - z) *
                                            pbp(j1 + j2, k0, z));
                            }
                        std::string ps =
                            pstr("p1=", p1, " p2=", p2, " k0=", k0, " k1=", k1, " k2=", k2);
                        rep.record("center-free/bernoullified", ps, ly, lz);
                        rep.record("center-free/diagonal", ps, diag, dz);
                    }
}

// The four-way specialization with parameter q in the shifts.
inline void four_way_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x = MPoly::var("x");
    for (long k0 : cfg.k_values)
        for (long k1 : cfg.k_values)
            for (long k2 : cfg.k_values)
                for (const Rat& q : cfg.rational_samples)
                    for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                        for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                            MPoly one(1L);
                            MPoly zq = one - (q - Rat(1)) * x;  // 1-(q-1)x
                            MPoly zr = q * x - one;             // qx-1
                            MPoly t1, t2, t3, t4;
                            for (unsigned j1 = 0; j1 <= p1; ++j1)
                                for (unsigned j2 = 0; j2 <= p2; ++j2) {
                                    Rat bc(binomial(p1, j1) * binomial(p2, j2));
                                    t1 += bc * pb_number(p1 - j1, k1) * pb_number(p2 - j2, k2) *
                                          pbp(j1 + j2, k0, x);
                                    t2 += bc * (pbp(p1 - j1, k1, x) * pbp(p2 - j2, k2, x)) *
                                          pb_number(j1 + j2, k0);
                                    t3 += bc * (pbp(p1 - j1, k1, zr) * pbp(p2 - j2, k2, zr) *
                                                pbp(j1 + j2, k0, zq));
                                    t4 += bc * (pbp(p1 - j1, k1, zq) * pbp(p2 - j2, k2, zq) *
                                                pbp(j1 + j2, k0, zr));
                                }
                            std::string ps = pstr("p1=", p1, " p2=", p2, " k0=", k0, " k1=", k1,
                                                  " k2=", k2, " q=", q.str());
                            record_chain(rep, "four-way/parametric", ps, std::vector<MPoly>{t1, t2, t3, t4});
                        }
}

// Standard-Bernoulli four-way (q=2, all k's = 1) and the odd-parity zero sum.
inline void four_way_classical_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    if (cfg.k_values.empty()) return;
    MPoly x = MPoly::var("x");
    MPoly two_x_m1 = Rat(2) * x - MPoly(1L);
    for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
        for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
            MPoly t1, t2, t3, t4;
            Rat zsum(0);
            for (unsigned j1 = 0; j1 <= p1; ++j1)
                for (unsigned j2 = 0; j2 <= p2; ++j2) {
                    Rat bc(binomial(p1, j1) * binomial(p2, j2));
                    t1 += bc * bernoulli_number(p1 - j1) * bernoulli_number(p2 - j2) *
                          bern_at(j1 + j2, x);
                    t2 += bc * bernoulli_number(j1 + j2) * (bern_at(p1 - j1, x) * bern_at(p2 - j2, x));
                    t3 += (bc * sgn(j1 + j2)) *
                          (bern_at(p1 - j1, two_x_m1) * bern_at(p2 - j2, two_x_m1) *
                           bern_at(j1 + j2, x));
                    t4 += (bc * sgn(j1 + j2)) *
                          (bern_at(p1 - j1, x) * bern_at(p2 - j2, x) * bern_at(j1 + j2, two_x_m1));
                    zsum += bc * sgn(j1 + j2) * bernoulli_number(p1 - j1) *
                            bernoulli_number(p2 - j2) * bernoulli_number(j1 + j2);
                }
            t4 = sgn(p1 + p2) * t4;
            std::string ps = pstr("p1=", p1, " p2=", p2);
            record_chain(rep, "four-way/classical", ps, std::vector<MPoly>{t1, t2, t3, t4});
            if ((p1 + p2) % 2 == 1) rep.record("four-way/odd-zero", ps, zsum, Rat(0));
        }
}

// Factorial-weighted Stirling sums and their bernoullified closed form.
inline void factorial_weighted_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    if (cfg.k_values.empty()) return;
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    for (unsigned r : cfg.r_values)
        for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
            for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                MPoly a, b;
                for (unsigned j1 = 0; j1 <= p1; ++j1)
                    for (unsigned j2 = 0; j2 <= p2; ++j2) {
                        Rat bc(binomial(p1, j1) * binomial(p2, j2));
                        Rat wa(0), wb(0);
                        for (unsigned l = 0; l <= j1 + j2; ++l) {
                            wa += sgn(l) * Rat(factorial(l + r) * stirling2(j1 + j2, l));
                            wb += sgn(l) * Rat(factorial(l + r) * stirling2(j1 + j2 + 1, l + 1));
                        }
                        a += (bc * wa) * (x1.pow(p1 - j1) * x2.pow(p2 - j2));
                        b += (bc * wb) * ((x1 - MPoly(1L)).pow(p1 - j1) *
                                          (x2 - MPoly(1L)).pow(p2 - j2));
                    }
                long s = -static_cast<long>(r) - 1;
                MPoly closed = Rat(factorial(r)) *
                               ((x1 + MPoly(s)).pow(p1) * (x2 + MPoly(s)).pow(p2));
                std::string ps = pstr("p1=", p1, " p2=", p2, " r=", r);
                record_chain(rep, "factorial-weighted/plain", ps, std::vector<MPoly>{a, b, closed});
            }
    for (long k1 : cfg.k_values)
        for (long k2 : cfg.k_values)
            for (unsigned r : cfg.r_values)
                for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                    for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                        MPoly a, b;
                        for (unsigned j1 = 0; j1 <= p1; ++j1)
                            for (unsigned j2 = 0; j2 <= p2; ++j2) {
                                Rat bc(binomial(p1, j1) * binomial(p2, j2));
                                Rat wa(0), wb(0);
                                for (unsigned l = 0; l <= j1 + j2; ++l) {
                                    wa += sgn(l) * Rat(factorial(l + r) * stirling2(j1 + j2, l));
                                    wb += sgn(l) *
                                          Rat(factorial(l + r) * stirling2(j1 + j2 + 1, l + 1));
                                }
                                a += (bc * wa) * (pbp(p1 - j1, k1, x1) * pbp(p2 - j2, k2, x2));
                                b += (bc * wb) * (pbp(p1 - j1, k1, x1 - MPoly(1L)) *
                                                  pbp(p2 - j2, k2, x2 - MPoly(1L)));
                            }
                        long s = -static_cast<long>(r) - 1;
                        MPoly closed = Rat(factorial(r)) * (pbp(p1, k1, x1 + MPoly(s)) *
                                                            pbp(p2, k2, x2 + MPoly(s)));
                        std::string ps =
                            pstr("p1=", p1, " p2=", p2, " r=", r, " k1=", k1, " k2=", k2);
                        record_chain(rep, "factorial-weighted/bernoullified", ps, std::vector<MPoly>{a, b, closed});
                    }
}

// Difference of shifted bi-variate polynomials: center-free form for any k0,
// telescoping closed form at k0 = 1.
inline void difference_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly y = MPoly::var("y"), z = MPoly::var("z");
    for (long k0 : cfg.k_values)
        for (unsigned r : cfg.r_values) {
            if (r == 0) continue;  // r is a positive shift here
            MPoly rr(static_cast<long>(r));
            for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                    MPoly diff = pb2(p1, p2, k0).subst({{"x1", x1 + rr}, {"x2", x2 + rr}}) -
                                 pb2(p1, p2, k0);
                    MPoly centered;
                    for (unsigned j1 = 0; j1 <= p1; ++j1)
                        for (unsigned j2 = 0; j2 <= p2; ++j2) {
                            Rat bc(binomial(p1, j1) * binomial(p2, j2));
                            centered += bc * ((x1 + rr - y).pow(p1 - j1) *
                                                  (x2 + rr - y).pow(p2 - j2) *
                                                  pbp(j1 + j2, k0, y) -
                                              (x1 - z).pow(p1 - j1) * (x2 - z).pow(p2 - j2) *
                                                  pbp(j1 + j2, k0, z));
                        }
                    std::string ps = pstr("p1=", p1, " p2=", p2, " k0=", k0, " r=", r);
                    rep.record("difference/centered", ps, diff, centered);
                    if (k0 == 1) {
                        MPoly tel;
                        for (unsigned t = 0; t < r; ++t) {
                            MPoly tt(static_cast<long>(t));
                            if (p1 > 0)
                                tel += Rat(static_cast<long>(p1)) *
                                       ((x2 + tt).pow(p2) * (x1 + tt).pow(p1 - 1));
                            if (p2 > 0)
                                tel += Rat(static_cast<long>(p2)) *
                                       ((x1 + tt).pow(p1) * (x2 + tt).pow(p2 - 1));
                        }
                        rep.record("difference/telescoped", ps, diff, tel);
                    }
                }
        }
}

// Bernoullified difference identity and its four (y,z) specializations.
inline void difference_bern_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly y = MPoly::var("y"), z = MPoly::var("z");
    for (long k1 : cfg.k_values)
        for (long k2 : cfg.k_values)
            for (unsigned r : cfg.r_values) {
                if (r == 0) continue;
                MPoly rr(static_cast<long>(r));
                for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                    for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                        MPoly d1, d2, l2, l3, l4, l5;
                        for (unsigned j1 = 0; j1 <= p1; ++j1)
                            for (unsigned j2 = 0; j2 <= p2; ++j2) {
                                Rat bc(binomial(p1, j1) * binomial(p2, j2));
                                MPoly hi = pbp(p1 - j1, k1, x1 + rr) * pbp(p2 - j2, k2, x2 + rr);
                                MPoly mid = pbp(p1 - j1, k1, x1) * pbp(p2 - j2, k2, x2);
                                MPoly lo = pbp(p1 - j1, k1, x1 - rr) * pbp(p2 - j2, k2, x2 - rr);
                                Rat bn = bernoulli_number(j1 + j2);
                                Rat br = bern_at(j1 + j2, rr).as_rat();
                                Rat bmr = bern_at(j1 + j2, -rr).as_rat();
                                Rat b2r = bern_at(j1 + j2, Rat(2) * rr).as_rat();
                                d1 += bc * bn * (hi - mid);
                                d2 += bc * (pbp(p1 - j1, k1, x1 + rr - y) *
                                                pbp(p2 - j2, k2, x2 + rr - y) *
                                                bern_at(j1 + j2, y) -
                                            pbp(p1 - j1, k1, x1 - z) * pbp(p2 - j2, k2, x2 - z) *
                                                bern_at(j1 + j2, z));
                                l2 += (bc * br) * (mid - lo);
                                l3 += (bc * (br - bn)) * mid;
                                l4 += (bc * (bn - bmr)) * hi;
                                l5 += (bc * (b2r - br)) * lo;
                            }
                        MPoly tel;
                        for (unsigned t = 0; t < r; ++t) {
                            MPoly tt(static_cast<long>(t));
                            if (p1 > 0)
                                tel += Rat(static_cast<long>(p1)) *
                                       (pbp(p1 - 1, k1, x1 + tt) * pbp(p2, k2, x2 + tt));
                            if (p2 > 0)
                                tel += Rat(static_cast<long>(p2)) *
                                       (pbp(p1, k1, x1 + tt) * pbp(p2 - 1, k2, x2 + tt));
                        }
                        std::string ps =
                            pstr("p1=", p1, " p2=", p2, " k1=", k1, " k2=", k2, " r=", r);
                        rep.record("difference/bernoullified", ps, d1, d2);
                        record_chain(rep, "difference/six-chain", ps,
                                     std::vector<MPoly>{d1, l2, l3, l4, l5, tel});
                    }
            }
}

// Stirling-first-kind number identities and their k=1 Carlitz enrichment.
inline void first_kind_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    for (long k : cfg.k_values)
        for (unsigned q : cfg.q_values)
            for (unsigned p1 = 0; p1 <= cfg.max_p; ++p1)
                for (unsigned p2 = 0; p2 <= cfg.max_p; ++p2) {
                    Rat a(0), b(0), c(0);
                    for (unsigned l = 0; l <= q; ++l) {
                        Rat sa = sgn(l) * Rat(stirling1_unsigned(q, static_cast<long>(l)));
                        for (unsigned j2 = 0; j2 <= p2; ++j2)
                            a += sa * Rat(binomial(p2, j2)) * pb_number(p1 + l + j2, k);
                        Rat sb = sgn(l) * Rat(stirling1_unsigned(q + 1, static_cast<long>(l) + 1));
                        for (unsigned j2 = 0; j2 <= p2 + l; ++j2)
                            b += sb * Rat(binomial(p2 + l, j2)) * pb_number(p1 + j2, k);
                    }
                    for (unsigned j1 = 0; j1 <= p1; ++j1)
                        for (unsigned j2 = 0; j2 <= p2; ++j2) {
                            Rat bc(binomial(p1, j1) * binomial(p2, j2));
                            Rat pw = Rat(static_cast<long>(q)).pow(p1 - j1) *
                                     Rat(static_cast<long>(q) + 1).pow(p2 - j2);
                            for (unsigned l = 0; l <= j1 + j2; ++l)
                                c += bc * pw * Rat(stirling2(j1 + j2, l)) * sgn(l) *
                                     Rat(factorial(l + q)) *
                                     Rat(static_cast<long>(l + q) + 1).pow(-k);
                        }
                    std::string ps = pstr("p1=", p1, " p2=", p2, " q=", q, " k=", k);
                    record_chain(rep, "first-kind/numbers", ps, std::vector<Rat>{a, b, c});
                    if (k == 1) {
                        Rat e2(0), e4(0);
                        for (unsigned l = 0; l <= q; ++l) {
                            Rat s1(stirling1_unsigned(q, static_cast<long>(l)));
                            for (unsigned j1 = 0; j1 <= p1 + l; ++j1)
                                e2 += s1 * Rat(binomial(p1 + l, j1)) * bernoulli_number(j1 + p2);
                            Rat s2(stirling1_unsigned(q + 1, static_cast<long>(l) + 1));
                            for (unsigned j1 = 0; j1 <= p1; ++j1)
                                e4 += s2 * Rat(binomial(p1, j1)) * bernoulli_number(j1 + p2 + l);
                        }
                        e2 = sgn(p1 + p2) * e2;
                        e4 = sgn(p1 + p2) * e4;
                        record_chain(rep, "first-kind/enriched", ps, std::vector<Rat>{a, e2, b, e4, c});
                    }
                }
}

// Three-variable versions of the generalized recurrences and shift families.
inline void three_var_entry(const CatalogConfig& cfg, SuiteReport& rep) {
    const unsigned dmax = 2;
    MPoly xs[3] = {MPoly::var("x1"), MPoly::var("x2"), MPoly::var("x3")};
    auto pb3 = [](unsigned a, unsigned b, unsigned c, long k) { return pbn({a, b, c}, k); };
    for (long k : cfg.k_values)
        for (unsigned q : cfg.q_values) {
            if (q > 2) continue;
            for (unsigned p1 = 0; p1 <= dmax; ++p1)
                for (unsigned p2 = 0; p2 <= dmax; ++p2)
                    for (unsigned p3 = 0; p3 <= dmax; ++p3) {
                        std::string ps =
                            pstr("p=(", p1, ",", p2, ",", p3, ") q=", q, " k=", k);
                        // (a): binomial x-weights against the R-weighted sum
                        MPoly la[3], rhs_a;
                        for (unsigned l = 0; l <= q; ++l) {
                            Rat bc(binomial(q, l));
                            la[0] += bc * ((-xs[0]).pow(q - l) * pb3(p1 + l, p2, p3, k));
                            la[1] += bc * ((-xs[1]).pow(q - l) * pb3(p1, p2 + l, p3, k));
                            la[2] += bc * ((-xs[2]).pow(q - l) * pb3(p1, p2, p3 + l, k));
                        }
                        for (unsigned j1 = 0; j1 <= p1; ++j1)
                            for (unsigned j2 = 0; j2 <= p2; ++j2)
                                for (unsigned j3 = 0; j3 <= p3; ++j3) {
                                    Rat bc(binomial(p1, j1) * binomial(p2, j2) *
                                           binomial(p3, j3));
                                    Rat w(0);
                                    for (unsigned l = 0; l <= j1 + j2 + j3; ++l) {
                                        Rat prod(1);
                                        for (unsigned i = 1; i <= q + 1; ++i)
                                            prod *= Rat(static_cast<long>(l + i));
                                        w += sgn(l) * Rat(factorial(l)) *
                                             Rat(stirling2(j1 + j2 + j3, l)) *
                                             r_function(static_cast<long>(q) - 1, k,
                                                        Rat(static_cast<long>(l))) *
                                             prod.pow(-k);
                                    }
                                    rhs_a -= (bc * w) * (xs[0].pow(p1 - j1) * xs[1].pow(p2 - j2) *
                                                         xs[2].pow(p3 - j3));
                                }
                        record_chain(rep, "threevar/binomial-weights", ps,
                                     std::vector<MPoly>{la[0], la[1], la[2], rhs_a});
                        // (b): derivative weights against the q-shifted sum
                        MPoly lb[3], rhs_b;
                        MPoly rp[3] = {rising_product(q, xs[0]), rising_product(q, xs[1]),
                                       rising_product(q, xs[2])};
                        for (unsigned l = 0; l <= q; ++l) {
                            Rat w = sgn(l) * Rat(Int(1), factorial(l));
                            lb[0] += w * (pb3(p1 + l, p2, p3, k) * rp[0]);
                            lb[1] += w * (pb3(p1, p2 + l, p3, k) * rp[1]);
                            lb[2] += w * (pb3(p1, p2, p3 + l, k) * rp[2]);
                            rp[0] = rp[0].diff("x1");
                            rp[1] = rp[1].diff("x2");
                            rp[2] = rp[2].diff("x3");
                        }
                        MPoly qq(static_cast<long>(q));
                        for (unsigned j1 = 0; j1 <= p1; ++j1)
                            for (unsigned j2 = 0; j2 <= p2; ++j2)
                                for (unsigned j3 = 0; j3 <= p3; ++j3) {
                                    Rat bc(binomial(p1, j1) * binomial(p2, j2) *
                                           binomial(p3, j3));
                                    Rat w(0);
                                    for (unsigned l = 0; l <= j1 + j2 + j3; ++l)
                                        w += sgn(l) * Rat(stirling2(j1 + j2 + j3, l)) *
                                             Rat(factorial(l + q)) *
                                             Rat(static_cast<long>(l + q) + 1).pow(-k);
                                    rhs_b += (bc * w) *
                                             ((xs[0] + qq).pow(p1 - j1) *
                                              (xs[1] + qq).pow(p2 - j2) *
                                              (xs[2] + qq).pow(p3 - j3));
                                }
                        record_chain(rep, "threevar/derivative-weights", ps,
                                     std::vector<MPoly>{lb[0], lb[1], lb[2], rhs_b});
                        // (c): alternating pair shifts
                        MPoly c23, c13, c12;
                        for (unsigned j = 0; j <= q; ++j) {
                            Rat w = sgn(j) * Rat(binomial(q, j));
                            c23 += w * pb3(p1, p2 + j, p3 + q - j, k);
                            c13 += w * pb3(p1 + j, p2, p3 + q - j, k);
                            c12 += w * pb3(p1 + j, p2 + q - j, p3, k);
                        }
                        MPoly base = pb3(p1, p2, p3, k);
                        rep.record("threevar/pair-shift", ps + " pair=23", c23,
                                   (xs[2] - xs[1]).pow(q) * base);
                        rep.record("threevar/pair-shift", ps + " pair=13", c13,
                                   (xs[2] - xs[0]).pow(q) * base);
                        rep.record("threevar/pair-shift", ps + " pair=12", c12,
                                   (xs[1] - xs[0]).pow(q) * base);
                        // (d): raising one index via difference powers
                        MPoly d12, d13, d21, d23, d31, d32;
                        for (unsigned j = 0; j <= q; ++j) {
                            Rat w(binomial(q, j));
                            d12 += w * ((xs[0] - xs[1]).pow(j) * pb3(p1, p2 + q - j, p3, k));
                            d13 += w * ((xs[0] - xs[2]).pow(j) * pb3(p1, p2, p3 + q - j, k));
                            d21 += w * ((xs[1] - xs[0]).pow(j) * pb3(p1 + q - j, p2, p3, k));
                            d23 += w * ((xs[1] - xs[2]).pow(j) * pb3(p1, p2, p3 + q - j, k));
                            d31 += w * ((xs[2] - xs[0]).pow(j) * pb3(p1 + q - j, p2, p3, k));
                            d32 += w * ((xs[2] - xs[1]).pow(j) * pb3(p1, p2 + q - j, p3, k));
                        }
                        record_chain(rep, "threevar/raise", ps + " target=1",
                                     std::vector<MPoly>{pb3(p1 + q, p2, p3, k), d12, d13});
                        record_chain(rep, "threevar/raise", ps + " target=2",
                                     std::vector<MPoly>{pb3(p1, p2 + q, p3, k), d21, d23});
                        record_chain(rep, "threevar/raise", ps + " target=3",
                                     std::vector<MPoly>{pb3(p1, p2, p3 + q, k), d31, d32});
                    }
        }
}

}  // namespace entries

struct CatalogEntry {
    std::string name;
    void (*run)(const CatalogConfig&, SuiteReport&);
};

/// The registered identity catalog.
inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries_v = {
        {"transfer-specs", &entries::transfer_specs},
        {"addition", &entries::addition_entry},
        {"product-split", &entries::product_entry},
        {"bernoulli-cross", &entries::bernoulli_cross_entry},
        {"stirling-triple", &entries::stirling_triple_entry},
        {"center-free", &entries::center_free_entry},
        {"four-way-parametric", &entries::four_way_entry},
        {"four-way-classical", &entries::four_way_classical_entry},
        {"factorial-weighted", &entries::factorial_weighted_entry},
        {"difference", &entries::difference_entry},
        {"difference-bernoullified", &entries::difference_bern_entry},
        {"first-kind", &entries::first_kind_entry},
        {"three-variable", &entries::three_var_entry},
    };
    return entries_v;
}

/// Runs every registered identity over the configured grid. Failures are
/// data in the report, not errors.
inline SuiteReport run_catalog(const CatalogConfig& cfg) {
    SuiteReport rep;
    for (const auto& e : catalog_entries()) e.run(cfg, rep);
    return rep;
}

}  // namespace polybern

#endif
