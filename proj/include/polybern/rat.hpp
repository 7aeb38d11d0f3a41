#ifndef POLYBERN_RAT_HPP
#define POLYBERN_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polybern {

using Int = mpz_class;

/// Exact rational scalar. Always stored reduced with a positive denominator;
/// zero is 0/1. All arithmetic is exact.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}
    // accept unevaluated integer expressions such as binomial(n,j) * factorial(l)
    template <class T, class U>
    Rat(const __gmp_expr<T, U>& e) : q_(Int(e)) {}

    /// Parses "a/b" or "a".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator*(Rat a, const Int& b) { return a *= Rat(b); }
    friend Rat operator*(const Int& a, Rat b) { return b *= Rat(a); }
    friend Rat operator+(Rat a, const Int& b) { return a += Rat(b); }
    friend Rat operator-(Rat a, const Int& b) { return a -= Rat(b); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

    /// Integer power with exponent of either sign; 0^0 = 1, negative powers of
    /// zero are a pole.
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rat: negative power of zero");
            return Rat(0);
        }
        mpq_class r;
        unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), a);
        mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), a);
        if (e < 0) r = 1 / r;
        r.canonicalize();
        return Rat(r);
    }

    /// "num/den", den omitted when 1.
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n,k); 0 when k < 0 or k > n.
inline Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

}  // namespace polybern

#endif
