#ifndef POLYBERN_POLYBERNOULLI_HPP
#define POLYBERN_POLYBERNOULLI_HPP

#include <map>
#include <mutex>
#include <vector>

#include "polybern/mpoly.hpp"
#include "polybern/stirling.hpp"

namespace polybern {

/// Poly-Bernoulli number B_p^{(k)} = sum_l S(p,l) (-1)^l l! / (l+1)^k.
/// k may be negative. Follows the finite-sum sign convention throughout,
/// so B_1^{(1)} = -1/2 (the classical B_1, not Kaneko's +1/2).
inline Rat pb_number(unsigned p, long k) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, long>, Rat> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, k});
        if (it != cache.end()) return it->second;
    }
    Rat sum(0);
    for (unsigned l = 0; l <= p; ++l) {
        Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
        sum += Rat(stirling2(p, static_cast<long>(l))) * sign * Rat(factorial(l)) *
               Rat(static_cast<long>(l) + 1).pow(-k);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(p, k), sum);
    return sum;
}

/// Classical Bernoulli number B_p; B_1 = -1/2.
inline Rat bernoulli_number(unsigned p) { return pb_number(p, 1); }

/// Classical Bernoulli polynomial B_p(x) in the given variable.
inline MPoly bernoulli_poly(unsigned p, const std::string& var = "x") {
    MPoly x = MPoly::var(var);
    MPoly sum;
    for (unsigned j = 0; j <= p; ++j)
        sum += Rat(binomial(p, j)) * bernoulli_number(j) * x.pow(p - j);
    return sum;
}

/// Poly-Bernoulli polynomial B_p^{(k)}(x) by the defining finite double sum.
/// k = 1 recovers the classical Bernoulli polynomial B_p(x).
inline MPoly pb_poly(unsigned p, long k, const std::string& var = "x") {
    MPoly x = MPoly::var(var);
    MPoly sum;
    for (unsigned l = 0; l <= p; ++l) {
        MPoly inner;
        for (unsigned j = 0; j <= l; ++j) {
            Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
            inner += (sign * Rat(binomial(l, j))) * (MPoly(static_cast<long>(j)) + x).pow(p);
        }
        sum += Rat(static_cast<long>(l) + 1).pow(-k) * inner;
    }
    return sum;
}

/// Same polynomial through the GSN route; must agree with pb_poly.
inline MPoly pb_poly_gsn(unsigned p, long k, const std::string& var = "x") {
    GsnParams g(Rat(1), MPoly::var(var), p, Rat(1), MPoly(), 0);
    MPoly sum;
    for (unsigned l = 0; l <= p; ++l) {
        Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
        sum += (sign * Rat(factorial(l)) * Rat(static_cast<long>(l) + 1).pow(-k)) *
               gsn_explicit(g, static_cast<long>(l));
    }
    return sum;
}

/// B_p^{(k)} composed with a polynomial argument, via the addition formula
/// B_p^{(k)}(u) = sum_j C(p,j) u^{p-j} B_j^{(k)}.
inline MPoly pb_poly_at(unsigned p, long k, const MPoly& u) {
    MPoly sum;
    for (unsigned j = 0; j <= p; ++j)
        sum += Rat(binomial(p, j)) * pb_number(j, k) * u.pow(p - j);
    return sum;
}

enum class Pb2Route { Definition, Explicit, Numbers, StirlingM, StirlingN };

/// Bi-variate poly-Bernoulli polynomial B_{p1,p2}^{(k)}(x1,x2). All five
/// routes produce the same canonical polynomial; `param` is m for StirlingM
/// and n for StirlingN.
inline MPoly pb2(unsigned p1, unsigned p2, long k, Pb2Route route = Pb2Route::Definition,
                 unsigned param = 0) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly sum;
    switch (route) {
        case Pb2Route::Definition:
            for (unsigned l = 0; l <= p1 + p2; ++l) {
                Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
                sum += (sign * Rat(factorial(l)) * Rat(static_cast<long>(l) + 1).pow(-k)) *
                       gsn_sym(p1, p2, static_cast<long>(l));
            }
            return sum;
        case Pb2Route::Explicit:
            for (unsigned l = 0; l <= p1 + p2; ++l) {
                Rat lsign = (l % 2 == 0) ? Rat(1) : Rat(-1);
                MPoly inner;
                for (unsigned j = 0; j <= l; ++j) {
                    Rat jsign = (j % 2 == 0) ? Rat(1) : Rat(-1);
                    MPoly base1 = MPoly(static_cast<long>(l - j)) + x1;
                    MPoly base2 = MPoly(static_cast<long>(l - j)) + x2;
                    inner += (jsign * Rat(binomial(l, j))) * (base1.pow(p1) * base2.pow(p2));
                }
                sum += (lsign * Rat(static_cast<long>(l) + 1).pow(-k)) * inner;
            }
            return sum;
        case Pb2Route::Numbers:
            for (unsigned j1 = 0; j1 <= p1; ++j1)
                for (unsigned j2 = 0; j2 <= p2; ++j2)
                    sum += Rat(binomial(p1, j1) * binomial(p2, j2)) * pb_number(j1 + j2, k) *
                           (x1.pow(p1 - j1) * x2.pow(p2 - j2));
            return sum;
        case Pb2Route::StirlingM:
            for (unsigned l = 0; l <= p1 + p2; ++l) {
                Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
                sum += (sign * Rat(factorial(l)) * Rat(static_cast<long>(l) + 1).pow(-k)) *
                       gsn_via_stirling_m(p1, p2, static_cast<long>(l), param);
            }
            return sum;
        case Pb2Route::StirlingN:
            for (unsigned l = 0; l <= p1 + p2; ++l) {
                Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
                sum += (sign * Rat(factorial(l)) * Rat(static_cast<long>(l) + 1).pow(-k)) *
                       gsn_via_stirling_n(p1, p2, static_cast<long>(l), param);
            }
            return sum;
    }
    return sum;  // unreachable
}

/// n-variate poly-Bernoulli polynomial in x1..xn by the multi-binomial
/// expansion over poly-Bernoulli numbers.
inline MPoly pbn(const std::vector<unsigned>& degrees, long k) {
    if (degrees.empty()) throw std::invalid_argument("pbn: need at least one degree");
    size_t n = degrees.size();
    std::vector<MPoly> xs;
    for (size_t i = 0; i < n; ++i) xs.push_back(MPoly::var("x" + std::to_string(i + 1)));
    MPoly sum;
    std::vector<unsigned> j(n, 0);
    while (true) {
        Rat c(1);
        unsigned jtot = 0;
        MPoly mono(Rat(1));
        for (size_t i = 0; i < n; ++i) {
            c *= Rat(binomial(degrees[i], j[i]));
            jtot += j[i];
            mono *= xs[i].pow(degrees[i] - j[i]);
        }
        sum += c * pb_number(jtot, k) * mono;
        // odometer over 0..degrees[i]
        size_t i = 0;
        while (i < n && j[i] == degrees[i]) j[i++] = 0;
        if (i == n) break;
        ++j[i];
    }
    return sum;
}

/// Addition formula around an arbitrary center (y1, y2), symbolic or
/// rational; equals pb2 for every center.
inline MPoly pb2_addition(unsigned p1, unsigned p2, long k, const MPoly& y1, const MPoly& y2) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly sum;
    for (unsigned j1 = 0; j1 <= p1; ++j1)
        for (unsigned j2 = 0; j2 <= p2; ++j2) {
            MPoly center = pb2(j1, j2, k).subst({{"x1", y1}, {"x2", y2}});
            sum += Rat(binomial(p1, j1) * binomial(p2, j2)) *
                   ((x1 - y1).pow(p1 - j1) * (x2 - y2).pow(p2 - j2) * center);
        }
    return sum;
}

}  // namespace polybern

#endif
