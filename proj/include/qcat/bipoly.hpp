// Bivariate polynomials in q and t with arbitrary-precision integer
// coefficients. Only what the q,t-Catalan sums need: addition,
// multiplication, the q<->t swap and the t -> 1/q specialization.
#pragma once

#include <map>
#include <sstream>
#include <utility>

#include "laurent.hpp"

namespace qcat {

class BiPoly {
public:
    using Key = std::pair<long long, long long>;  // (q-exponent, t-exponent)

    BiPoly() = default;

    static BiPoly monomial(BigInt c, long long i, long long j) {
        BiPoly p;
        if (c != 0) p.terms_[{i, j}] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BigInt>& terms() const { return terms_; }

    void add_term(const BigInt& c, long long i, long long j) {
        if (c == 0) return;
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            terms_[{i, j}] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend BiPoly operator+(const BiPoly& f, const BiPoly& g) {
        BiPoly r = f;
        for (const auto& [k, c] : g.terms_) r.add_term(c, k.first, k.second);
        return r;
    }

    friend BiPoly operator*(const BiPoly& f, const BiPoly& g) {
        BiPoly r;
        for (const auto& [ka, ca] : f.terms_)
            for (const auto& [kb, cb] : g.terms_)
                r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }

    BiPoly swap_vars() const {
        BiPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
        return r;
    }

    // t -> q^{-1}: the term c*q^i*t^j becomes c*q^{i-j}.
    LaurentPoly specialize_t_to_inverse_q() const {
        std::vector<LaurentPoly::Term> t;
        t.reserve(terms_.size());
        for (const auto& [k, c] : terms_) t.emplace_back(k.first - k.second, c);
        return LaurentPoly::from_terms(std::move(t));
    }

    BigInt eval_at_ones() const {
        BigInt s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    friend bool operator==(const BiPoly& f, const BiPoly& g) { return f.terms_ == g.terms_; }
    friend bool operator!=(const BiPoly& f, const BiPoly& g) { return !(f == g); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            const auto [i, j] = k;
            bool coeff_only = (i == 0 && j == 0);
            if (coeff_only || mag != 1) {
                out << mag.str();
                if (!coeff_only) out << "*";
            }
            if (i != 0) {
                out << "q";
                if (i != 1) out << "^" << i;
                if (j != 0) out << "*";
            }
            if (j != 0) {
                out << "t";
                if (j != 1) out << "^" << j;
            }
        }
        return out.str();
    }

private:
    std::map<Key, BigInt> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
    return os << p.to_string();
}

}  // namespace qcat
