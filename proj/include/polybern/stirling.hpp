#ifndef POLYBERN_STIRLING_HPP
#define POLYBERN_STIRLING_HPP

#include <mutex>
#include <vector>

#include "polybern/mpoly.hpp"
#include "polybern/rat.hpp"

namespace polybern {

namespace detail {

// Memoized triangle grown row by row; readers take the same lock, so no
// partial rows are ever visible.
class Triangle {
public:
    // next(row, col) computes entry (row, col) from the previous row, where
    // row >= 1 and 0 <= col <= row.
    template <class Next>
    Int at(unsigned long n, unsigned long k, Next next) {
        std::lock_guard<std::mutex> lock(mu_);
        if (rows_.empty()) rows_.push_back({Int(1)});
        while (rows_.size() <= n) {
            unsigned long r = rows_.size();
            std::vector<Int> row(r + 1);
            for (unsigned long c = 0; c <= r; ++c) row[c] = next(rows_[r - 1], r, c);
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<Int>> rows_;
};

inline Int prev(const std::vector<Int>& row, unsigned long c) {
    return c < row.size() ? row[c] : Int(0);
}

}  // namespace detail

/// Stirling numbers of the second kind S(p,k); 0 outside 0 <= k <= p,
/// S(0,0) = 1.
inline Int stirling2(unsigned long p, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > p) return 0;
    static detail::Triangle tri;
    return tri.at(p, static_cast<unsigned long>(k),
                  [](const std::vector<Int>& prev_row, unsigned long, unsigned long c) -> Int {
                      Int lo = c > 0 ? detail::prev(prev_row, c - 1) : Int(0);
                      return Int(lo + Int(static_cast<long>(c)) * detail::prev(prev_row, c));
                  });
}

/// Unsigned Stirling numbers of the first kind s(n,k); coefficients of the
/// rising product x(x+1)...(x+n-1).
inline Int stirling1_unsigned(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    static detail::Triangle tri;
    return tri.at(n, static_cast<unsigned long>(k),
                  [](const std::vector<Int>& prev_row, unsigned long r, unsigned long c) -> Int {
                      Int lo = c > 0 ? detail::prev(prev_row, c - 1) : Int(0);
                      return Int(lo + Int(static_cast<long>(r - 1)) * detail::prev(prev_row, c));
                  });
}

/// Parameters (a1,b1,p1,a2,b2,p2) of a generalized Stirling family. The b's
/// may be rational constants or (possibly shifted) symbols.
struct GsnParams {
    Rat a1;
    MPoly b1;
    unsigned p1 = 0;
    Rat a2;
    MPoly b2;
    unsigned p2 = 0;

    GsnParams(Rat a1_, MPoly b1_, unsigned p1_, Rat a2_, MPoly b2_, unsigned p2_)
        : a1(std::move(a1_)), b1(std::move(b1_)), p1(p1_), a2(std::move(a2_)), b2(std::move(b2_)), p2(p2_) {
        if (a1.is_zero() || a2.is_zero())
            throw std::invalid_argument("GsnParams: a1 and a2 must be nonzero");
    }
};

/// The symbolic family S_{1,x1}^{1,x2,p2}.
inline GsnParams gsn_sym_params(unsigned p1, unsigned p2) {
    return GsnParams(Rat(1), MPoly::var("x1"), p1, Rat(1), MPoly::var("x2"), p2);
}

/// Explicit alternating-sum formula for the GSN; exact, symbolic when the
/// b's are symbols. Zero when k < 0 or k > p1 + p2.
inline MPoly gsn_explicit(const GsnParams& g, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > g.p1 + g.p2) return MPoly();
    MPoly sum;
    for (long j = 0; j <= k; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        Rat c = Rat(sign * binomial(static_cast<unsigned long>(k), j));
        MPoly t1 = (Rat(k - j) * MPoly(g.a1) + g.b1).pow(g.p1);
        MPoly t2 = (Rat(k - j) * MPoly(g.a2) + g.b2).pow(g.p2);
        sum += c * (t1 * t2);
    }
    return Rat(Int(1), factorial(static_cast<unsigned long>(k))) * sum;
}

inline MPoly gsn_sym(unsigned p1, unsigned p2, long k) {
    return gsn_explicit(gsn_sym_params(p1, p2), k);
}

/// Symbolic-family route via the recurrence
/// S(p1,k) = S(p1-1,k-1) + (k+x1) S(p1-1,k), base p1 = 0 explicit.
inline MPoly gsn_recurrence(unsigned p1, unsigned p2, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > p1 + p2) return MPoly();
    if (p1 == 0) return gsn_sym(0, p2, k);
    MPoly shift = MPoly(k) + MPoly::var("x1");
    return gsn_recurrence(p1 - 1, p2, k - 1) + shift * gsn_recurrence(p1 - 1, p2, k);
}

/// Change-of-basis route: expands the symbolic family around rational
/// centers (y1, y2).
inline MPoly gsn_change_basis(unsigned p1, unsigned p2, long k, const Rat& y1, const Rat& y2) {
    if (k < 0 || static_cast<unsigned long>(k) > p1 + p2) return MPoly();
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly sum;
    for (unsigned j1 = 0; j1 <= p1; ++j1)
        for (unsigned j2 = 0; j2 <= p2; ++j2) {
            Rat c(binomial(p1, j1) * binomial(p2, j2));
            MPoly s = gsn_explicit(GsnParams(Rat(1), MPoly(y1), j1, Rat(1), MPoly(y2), j2), k);
            sum += c * ((x1 - MPoly(y1)).pow(p1 - j1) * (x2 - MPoly(y2)).pow(p2 - j2) * s);
        }
    return sum;
}

/// Standard-Stirling route with a free non-negative shift m.
inline MPoly gsn_via_stirling_m(unsigned p1, unsigned p2, long k, unsigned m) {
    if (k < 0 || static_cast<unsigned long>(k) > p1 + p2) return MPoly();
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly sum;
    for (unsigned j1 = 0; j1 <= p1; ++j1)
        for (unsigned j2 = 0; j2 <= p2; ++j2) {
            Rat inner(0);
            for (unsigned i = 0; i <= m; ++i)
                inner += Rat(binomial(m, i) * factorial(static_cast<unsigned long>(k) + i) *
                             stirling2(j1 + j2, k + static_cast<long>(i)));
            if (inner.is_zero()) continue;
            Rat c(binomial(p1, j1) * binomial(p2, j2));
            sum += (c * inner) *
                   ((x1 - MPoly(static_cast<long>(m))).pow(p1 - j1) *
                    (x2 - MPoly(static_cast<long>(m))).pow(p2 - j2));
        }
    return Rat(Int(1), factorial(static_cast<unsigned long>(k))) * sum;
}

/// Stirling-first-kind route with a free positive shift n.
inline MPoly gsn_via_stirling_n(unsigned p1, unsigned p2, long k, unsigned n) {
    if (n < 1) throw std::invalid_argument("gsn_via_stirling_n: n must be positive");
    if (k < 0 || static_cast<unsigned long>(k) > p1 + p2) return MPoly();
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly sum;
    for (unsigned j1 = 0; j1 <= p1; ++j1)
        for (unsigned j2 = 0; j2 <= p2; ++j2) {
            Rat inner(0);
            for (unsigned i = 0; i < n; ++i) {
                Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);
                inner += sign * Rat(stirling1_unsigned(n, static_cast<long>(n - i)) *
                                    stirling2(j1 + j2 + n - i, k + static_cast<long>(n)));
            }
            if (inner.is_zero()) continue;
            Rat c(binomial(p1, j1) * binomial(p2, j2));
            sum += (c * inner) *
                   ((x1 - MPoly(static_cast<long>(n))).pow(p1 - j1) *
                    (x2 - MPoly(static_cast<long>(n))).pow(p2 - j2));
        }
    return sum;
}

/// Weighted factorial sum over the symbolic family; closed form is
/// r! (x1-r-1)^{p1} (x2-r-1)^{p2}.
inline MPoly gsn_factorial_sum(unsigned p1, unsigned p2, unsigned r) {
    MPoly sum;
    for (unsigned l = 0; l <= p1 + p2; ++l) {
        Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
        sum += (sign * Rat(factorial(l + r))) * gsn_sym(p1, p2, static_cast<long>(l));
    }
    return sum;
}

}  // namespace polybern

#endif
