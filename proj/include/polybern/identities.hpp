#ifndef POLYBERN_IDENTITIES_HPP
#define POLYBERN_IDENTITIES_HPP

#include <string>
#include <vector>

#include "polybern/polybernoulli.hpp"

namespace polybern {

/// A pair of formal sums  sum_r a_r (x+alpha)^r = sum_r b_r (x+beta)^r.
/// The base polynomial identity is checked at construction; the transfer
/// operator then replaces each (x+shift)^r by B_r^{(k)}(x+shift).
struct IdentitySpec {
    std::vector<MPoly> lhs_coeffs;
    MPoly lhs_shift;
    std::vector<MPoly> rhs_coeffs;
    MPoly rhs_shift;

    IdentitySpec(std::vector<MPoly> lc, MPoly ls, std::vector<MPoly> rc, MPoly rs)
        : lhs_coeffs(std::move(lc)),
          lhs_shift(std::move(ls)),
          rhs_coeffs(std::move(rc)),
          rhs_shift(std::move(rs)) {
        if (lhs_coeffs.size() != rhs_coeffs.size())
            throw std::invalid_argument("IdentitySpec: coefficient sequences differ in length");
        MPoly x = MPoly::var("x");
        MPoly l, r;
        for (size_t i = 0; i < lhs_coeffs.size(); ++i) {
            l += lhs_coeffs[i] * (x + lhs_shift).pow(static_cast<unsigned>(i));
            r += rhs_coeffs[i] * (x + rhs_shift).pow(static_cast<unsigned>(i));
        }
        if (l != r)
            throw std::invalid_argument("IdentitySpec: base polynomial identity does not hold");
    }
};

/// One side of a transfer: sum_r coeff_r * B_r^{(k)}(x + shift).
inline MPoly bernoullify(const std::vector<MPoly>& coeffs, const MPoly& shift, long k) {
    MPoly x = MPoly::var("x");
    MPoly sum;
    for (size_t r = 0; r < coeffs.size(); ++r)
        sum += coeffs[r] * pb_poly_at(static_cast<unsigned>(r), k, x + shift);
    return sum;
}

struct TransferResult {
    bool ok;
    std::string lhs;
    std::string rhs;
};

/// Applies the transfer operator to both sides and compares canonically.
/// Always true when the implementation is correct; a false result carries
/// both renderings as the witness.
inline TransferResult verify_transfer(const IdentitySpec& spec, long k) {
    MPoly l = bernoullify(spec.lhs_coeffs, spec.lhs_shift, k);
    MPoly r = bernoullify(spec.rhs_coeffs, spec.rhs_shift, k);
    return {l == r, l.str(), r.str()};
}

/// The recursively defined family R_{mu,k}(y); R_{-1,k} = -1. Rational in,
/// rational out; for k < 0 a zero base raises a pole error.
inline Rat r_function(long mu, long k, const Rat& y) {
    if (mu < -1) throw std::invalid_argument("r_function: mu must be >= -1");
    if (mu == -1) return Rat(-1);
    Rat a = y * (y + Rat(mu + 2)).pow(k) * r_function(mu - 1, k, y);
    Rat b = (y + Rat(1)).pow(k + 1) * r_function(mu - 1, k, y + Rat(1));
    return a - b;
}

struct RecurrenceMembers {
    MPoly lhs1;
    MPoly lhs2;
    MPoly rhs;
    bool agree() const { return lhs1 == lhs2 && lhs2 == rhs; }
};

/// Generalized recurrence with binomial x-weights: both shifted-index sums
/// and the R-function-weighted GSN sum, all equal as polynomials in x1,x2.
inline RecurrenceMembers gen_recurrence_A(unsigned p1, unsigned p2, unsigned q, long k) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    RecurrenceMembers m;
    for (unsigned l = 0; l <= q; ++l) {
        Rat c(binomial(q, l));
        m.lhs1 += c * ((-x1).pow(q - l) * pb2(p1 + l, p2, k));
        m.lhs2 += c * ((-x2).pow(q - l) * pb2(p1, p2 + l, k));
    }
    for (unsigned l = 0; l <= p1 + p2; ++l) {
        Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
        Rat prod(1);
        for (unsigned i = 1; i <= q + 1; ++i) prod *= Rat(static_cast<long>(l + i));
        Rat w = sign * Rat(factorial(l)) *
                r_function(static_cast<long>(q) - 1, k, Rat(static_cast<long>(l))) *
                prod.pow(-k);
        m.rhs -= w * gsn_sym(p1, p2, static_cast<long>(l));
    }
    return m;
}

/// Generalized recurrence with derivative weights of the rising product;
/// the closed side uses the GSN family shifted by q in both symbols.
inline RecurrenceMembers gen_recurrence_B(unsigned p1, unsigned p2, unsigned q, long k) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    RecurrenceMembers m;
    MPoly rp1 = rising_product(q, x1);
    MPoly rp2 = rising_product(q, x2);
    for (unsigned l = 0; l <= q; ++l) {
        Rat w = ((l % 2 == 0) ? Rat(1) : Rat(-1)) * Rat(Int(1), factorial(l));
        m.lhs1 += w * (pb2(p1 + l, p2, k) * rp1);
        m.lhs2 += w * (pb2(p1, p2 + l, k) * rp2);
        rp1 = rp1.diff("x1");
        rp2 = rp2.diff("x2");
    }
    GsnParams shifted(Rat(1), x1 + MPoly(static_cast<long>(q)), p1, Rat(1),
                      x2 + MPoly(static_cast<long>(q)), p2);
    for (unsigned l = 0; l <= p1 + p2; ++l) {
        Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
        Rat w = sign * Rat(factorial(l + q)) * Rat(static_cast<long>(l + q) + 1).pow(-k);
        m.rhs += w * gsn_explicit(shifted, static_cast<long>(l));
    }
    return m;
}

/// The binomial shift identities
///   sum_j C(q,j)(-1)^j B_{p1+j,p2+q-j} = (x2-x1)^q B_{p1,p2}   and
///   sum_j C(q,j)(x2-x1)^j B_{p1+q-j,p2} = B_{p1,p2+q}.
inline bool check_binomial_shift_family(unsigned p1, unsigned p2, unsigned q, long k) {
    MPoly x1 = MPoly::var("x1"), x2 = MPoly::var("x2");
    MPoly d = x2 - x1;
    MPoly a, b;
    for (unsigned j = 0; j <= q; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        a += (sign * Rat(binomial(q, j))) * pb2(p1 + j, p2 + q - j, k);
        b += Rat(binomial(q, j)) * (d.pow(j) * pb2(p1 + q - j, p2, k));
    }
    return a == d.pow(q) * pb2(p1, p2, k) && b == pb2(p1, p2 + q, k);
}

/// Carlitz's symmetric Bernoulli-number identity, both as the number sums
/// and as B_{p1,p2}(1,0) = (-1)^{p1+p2} B_{p1,p2}(0,1) at k = 1.
inline bool carlitz_check(unsigned p1, unsigned p2) {
    Rat lhs(0), rhs(0);
    for (unsigned j2 = 0; j2 <= p2; ++j2)
        lhs += Rat(binomial(p2, j2)) * bernoulli_number(p1 + j2);
    if ((p1 + p2) % 2 == 1) lhs = -lhs;
    for (unsigned j1 = 0; j1 <= p1; ++j1)
        rhs += Rat(binomial(p1, j1)) * bernoulli_number(j1 + p2);
    if (lhs != rhs) return false;
    MPoly b = pb2(p1, p2, 1);
    Rat at10 = b.subst({{"x1", MPoly(1L)}, {"x2", MPoly(0L)}}).as_rat();
    Rat at01 = b.subst({{"x1", MPoly(0L)}, {"x2", MPoly(1L)}}).as_rat();
    if ((p1 + p2) % 2 == 1) at01 = -at01;
    return at10 == at01 && at10 == rhs;
}

}  // namespace polybern

#endif
