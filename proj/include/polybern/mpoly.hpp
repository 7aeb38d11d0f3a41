#ifndef POLYBERN_MPOLY_HPP
#define POLYBERN_MPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polybern/rat.hpp"

namespace polybern {

/// Graded-lexicographic term order, largest term first: higher total degree
/// wins, ties broken by the lexicographically larger exponent vector.
struct GrlexGreater {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned da = std::accumulate(a.begin(), a.end(), 0u);
        unsigned db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over Rat. The canonical form (sorted
/// variable universe with no unused variables, grlex-sorted terms, no zero
/// coefficients) is unique, so operator== decides mathematical equality.
class MPoly {
public:
    using TermMap = std::map<std::vector<unsigned>, Rat, GrlexGreater>;

    MPoly() = default;
    MPoly(const Rat& c) { if (!c.is_zero()) terms_[{}] = c; }
    MPoly(long c) : MPoly(Rat(c)) {}
    MPoly(const Int& c) : MPoly(Rat(c)) {}

    static MPoly var(const std::string& name) {
        MPoly p;
        p.vars_ = {name};
        p.terms_[{1u}] = Rat(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }

    /// The constant value; only valid when is_constant().
    Rat as_rat() const {
        if (!vars_.empty()) throw std::domain_error("MPoly: not a constant");
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
        return d;
    }

    unsigned degree_in(const std::string& v) const {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return 0;
        size_t i = static_cast<size_t>(it - vars_.begin());
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        auto [av, bv, vars] = aligned(a, b);
        MPoly r;
        r.vars_ = std::move(vars);
        r.terms_ = std::move(av);
        for (auto& [e, c] : bv) {
            auto [it, fresh] = r.terms_.emplace(e, c);
            if (!fresh) it->second += c;
        }
        r.normalize();
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        auto [av, bv, vars] = aligned(a, b);
        MPoly r;
        r.vars_ = std::move(vars);
        std::vector<unsigned> e(r.vars_.size());
        for (const auto& [ea, ca] : av)
            for (const auto& [eb, cb] : bv) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto [it, fresh] = r.terms_.emplace(e, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        r.normalize();
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly pow(unsigned e) const {
        MPoly r(Rat(1));
        MPoly base(*this);
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    /// Substitutes bound variables by polynomials; unbound variables remain.
    MPoly subst(const std::map<std::string, MPoly>& bindings) const {
        MPoly r;
        for (const auto& [e, c] : terms_) {
            MPoly term(c);
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = bindings.find(vars_[i]);
                MPoly base = it != bindings.end() ? it->second : var(vars_[i]);
                term *= base.pow(e[i]);
            }
            r += term;
        }
        return r;
    }

    /// Formal partial derivative; zero for a variable the polynomial does not
    /// contain.
    MPoly diff(const std::string& v) const {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return MPoly();
        size_t i = static_cast<size_t>(it - vars_.begin());
        MPoly r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            auto de = e;
            --de[i];
            r.terms_[de] = c * Rat(static_cast<long>(e[i]));
        }
        r.normalize();
        return r;
    }

    /// Canonical text form, grlex order, e.g. "x1^2*x2 - 1/2*x1 + 2/3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
            bool neg = a < Rat(0);
            if (neg) a = -a;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += a.str();
            } else if (a == Rat(1)) {
                out += mono;
            } else {
                out += a.str() + "*" + mono;
            }
        }
        return out;
    }

private:
    std::vector<std::string> vars_;  // sorted ascending
    TermMap terms_;                  // exponent vectors of length vars_.size()

    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        // drop variables no surviving term uses
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap nt;
        for (const auto& [e, c] : terms_) {
            std::vector<unsigned> ne;
            ne.reserve(nv.size());
            for (size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            nt.emplace(std::move(ne), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    // Remaps both operands onto the union of their variable universes.
    static std::tuple<TermMap, TermMap, std::vector<std::string>> aligned(const MPoly& a,
                                                                          const MPoly& b) {
        std::vector<std::string> vars;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(vars));
        auto remap = [&vars](const MPoly& p) {
            TermMap out;
            std::vector<size_t> pos(p.vars_.size());
            for (size_t i = 0; i < p.vars_.size(); ++i)
                pos[i] = static_cast<size_t>(
                    std::lower_bound(vars.begin(), vars.end(), p.vars_[i]) - vars.begin());
            for (const auto& [e, c] : p.terms_) {
                std::vector<unsigned> ne(vars.size(), 0u);
                for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
                out.emplace(std::move(ne), c);
            }
            return out;
        };
        return {remap(a), remap(b), vars};
    }
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return MPoly(c) * p; }

/// The rising product (v)(v+1)...(v+q-1); 1 when q = 0. Its coefficients are
/// the unsigned Stirling numbers of the first kind.
inline MPoly rising_product(unsigned q, const MPoly& v) {
    MPoly r(Rat(1));
    for (unsigned i = 0; i < q; ++i) r *= v + MPoly(static_cast<long>(i));
    return r;
}

}  // namespace polybern

#endif
