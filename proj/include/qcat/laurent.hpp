// Exact sparse Laurent polynomial arithmetic over arbitrary-precision
// integers, plus the q-combinatorics primitives built on top of it:
// [n]_q, q-factorials, Gaussian binomials and q-Pochhammer symbols.
//
// Every operation is exact; there is no floating-point fallback anywhere.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcat {

using BigInt = boost::multiprecision::cpp_int;

class NotDivisible;

// Sparse Laurent polynomial in one variable q. Terms are kept sorted by
// exponent and never store a zero coefficient.
class LaurentPoly {
public:
    using Term = std::pair<long long, BigInt>;

    LaurentPoly() = default;

    static LaurentPoly monomial(BigInt coeff, long long exp) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
        return p;
    }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0); }

    // Terms must be sorted by exponent, duplicates allowed (they are merged).
    static LaurentPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& s, const Term& t) { return s.first < t.first; });
        LaurentPoly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first)
                p.terms_.back().second += t.second;
            else
                p.terms_.push_back(std::move(t));
        }
        p.strip_zeros();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    long long min_exponent() const {
        require_nonzero("min_exponent");
        return terms_.front().first;
    }
    long long degree() const {
        require_nonzero("degree");
        return terms_.back().first;
    }

    BigInt coeff(long long e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, long long x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return 0;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // True iff every stored coefficient is positive, i.e. the polynomial
    // lies in N[q^-1, q].
    bool is_nonneg() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { *this = add(*this, o, 1); return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = add(*this, o, -1); return *this; }
    friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) { return add(f, g, 1); }
    friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return add(f, g, -1); }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }

    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) { return mul(f, g); }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = mul(*this, o); return *this; }

    // f * c*q^e without building a temporary polynomial.
    LaurentPoly shifted_scaled(const BigInt& c, long long e) const {
        LaurentPoly p;
        if (c == 0) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& [exp, co] : terms_) p.terms_.emplace_back(exp + e, co * c);
        return p;
    }
    LaurentPoly shifted(long long e) const { return shifted_scaled(1, e); }

    // q -> q^d, i.e. every exponent is multiplied by d (d >= 1).
    LaurentPoly substitute_power(long long d) const {
        if (d < 1) throw std::invalid_argument("substitute_power: d must be >= 1");
        LaurentPoly p = *this;
        for (auto& [e, c] : p.terms_) e *= d;
        return p;
    }

    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
        return f.terms_ == g.terms_;
    }
    friend bool operator!=(const LaurentPoly& f, const LaurentPoly& g) { return !(f == g); }

    // Canonical rendering: ascending exponents, "1 + q^2 + 2*q^4" style,
    // "q^-3" for negative exponents. This exact format is the CLI and
    // golden-file contract.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (e == 0) {
                out << mag.str();
            } else {
                if (mag != 1) out << mag.str() << "*";
                out << "q";
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

private:
    std::vector<Term> terms_;

    void require_nonzero(const char* who) const {
        if (terms_.empty()) throw std::logic_error(std::string(who) + " of zero polynomial");
    }

    void strip_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return t.second == 0; }),
                     terms_.end());
    }

    static LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g, int sign) {
        LaurentPoly r;
        r.terms_.reserve(f.terms_.size() + g.terms_.size());
        auto a = f.terms_.begin(), ae = f.terms_.end();
        auto b = g.terms_.begin(), be = g.terms_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                r.terms_.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                r.terms_.emplace_back(b->first, sign < 0 ? BigInt(-b->second) : b->second);
                ++b;
            } else {
                BigInt c = sign < 0 ? BigInt(a->second - b->second) : BigInt(a->second + b->second);
                if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        return r;
    }

    static constexpr long long kDenseSpanLimit = 1LL << 21;

    static LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        const long long lo = f.min_exponent() + g.min_exponent();
        const long long hi = f.degree() + g.degree();
        const long long span = hi - lo + 1;
        LaurentPoly r;
        if (span <= kDenseSpanLimit) {
            std::vector<BigInt> acc(static_cast<std::size_t>(span));
            const auto& small = f.num_terms() <= g.num_terms() ? f : g;
            const auto& large = f.num_terms() <= g.num_terms() ? g : f;
            for (const auto& [es, cs] : small.terms_)
                for (const auto& [el, cl] : large.terms_)
                    acc[static_cast<std::size_t>(es + el - lo)] += cs * cl;
            for (long long e = 0; e < span; ++e)
                if (acc[static_cast<std::size_t>(e)] != 0)
                    r.terms_.emplace_back(lo + e, std::move(acc[static_cast<std::size_t>(e)]));
        } else {
            std::map<long long, BigInt> acc;
            for (const auto& [es, cs] : f.terms_)
                for (const auto& [el, cl] : g.terms_)
                    acc[es + el] += cs * cl;
            for (auto& [e, c] : acc)
                if (c != 0) r.terms_.emplace_back(e, std::move(c));
        }
        return r;
    }

    friend std::optional<LaurentPoly> try_exact_div(const LaurentPoly&, const LaurentPoly&,
                                                    LaurentPoly*);
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
}

// Exact division in Z[q^-1, q]. Returns the quotient when f = g*h, otherwise
// nullopt with the running remainder (f minus the partial quotient times g)
// stored in *remainder when requested.
inline std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g,
                                                LaurentPoly* remainder = nullptr) {
    if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (f.is_zero()) return LaurentPoly();

    const long long flo = f.min_exponent(), glo = g.min_exponent();
    const long long fspan = f.degree() - flo + 1;
    const long long gspan = g.degree() - glo + 1;

    auto fail = [&](std::vector<BigInt>& num, long long shift) -> std::optional<LaurentPoly> {
        if (remainder) {
            std::vector<LaurentPoly::Term> terms;
            for (long long e = 0; e < static_cast<long long>(num.size()); ++e)
                if (num[static_cast<std::size_t>(e)] != 0)
                    terms.emplace_back(e + shift, num[static_cast<std::size_t>(e)]);
            *remainder = LaurentPoly::from_terms(std::move(terms));
        }
        return std::nullopt;
    };

    // Ascending long division on the polynomial parts, minimal exponents
    // factored out first.
    std::vector<BigInt> num(static_cast<std::size_t>(fspan));
    for (const auto& [e, c] : f.terms()) num[static_cast<std::size_t>(e - flo)] = c;
    std::vector<std::pair<long long, BigInt>> div;
    div.reserve(g.num_terms());
    for (const auto& [e, c] : g.terms()) div.emplace_back(e - glo, c);
    const BigInt& g0 = div.front().second;
    const long long qmax = fspan - gspan;  // max quotient exponent

    std::vector<LaurentPoly::Term> quot;
    for (long long e = 0; e < fspan; ++e) {
        BigInt& c = num[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        if (e > qmax) return fail(num, flo);
        BigInt qc, rc;
        boost::multiprecision::divide_qr(c, g0, qc, rc);
        if (rc != 0) return fail(num, flo);
        for (const auto& [de, dc] : div) num[static_cast<std::size_t>(e + de)] -= qc * dc;
        quot.emplace_back(e + flo - glo, std::move(qc));
    }
    return LaurentPoly::from_terms(std::move(quot));
}

// Signals a falsified divisibility claim; carries the offending remainder so
// callers can print a counterexample certificate.
class NotDivisible : public std::runtime_error {
public:
    NotDivisible(std::string context, LaurentPoly remainder)
        : std::runtime_error(context + ": not divisible, remainder " + remainder.to_string()),
          remainder_(std::move(remainder)) {}
    const LaurentPoly& remainder() const { return remainder_; }

private:
    LaurentPoly remainder_;
};

inline LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g,
                             const std::string& context = "exact_div") {
    LaurentPoly rem;
    if (auto q = try_exact_div(f, g, &rem)) return *q;
    throw NotDivisible(context, rem);
}

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
inline LaurentPoly q_int(long long n) {
    if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
    std::vector<LaurentPoly::Term> t;
    t.reserve(static_cast<std::size_t>(n));
    for (long long e = 0; e < n; ++e) t.emplace_back(e, 1);
    return LaurentPoly::from_terms(std::move(t));
}

// [n]_q! = [1]_q [2]_q ... [n]_q.
inline LaurentPoly q_factorial(long long n) {
    LaurentPoly p = LaurentPoly::one();
    for (long long i = 1; i <= n; ++i) p *= q_int(i);
    return p;
}

// (q^m; q)_n = prod_{j=0}^{n-1} (1 - q^{m+j}); m may be negative.
inline LaurentPoly q_pochhammer(long long m, long long n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: n must be >= 0");
    LaurentPoly p = LaurentPoly::one();
    for (long long j = 0; j < n; ++j)
        p *= (LaurentPoly::one() - LaurentPoly::monomial(1, m + j));
    return p;
}

namespace detail {

// Gaussian binomials for all n in [k, n_max] at fixed k, by one rolling pass
// of the Pascal recurrence. out[n] is left empty for n < k.
inline std::vector<LaurentPoly> q_binomial_column(long long k, long long n_max) {
    std::vector<LaurentPoly> out(static_cast<std::size_t>(std::max(0LL, n_max + 1)));
    if (k < 0 || n_max < k) return out;
    std::vector<LaurentPoly> row(static_cast<std::size_t>(k + 1));
    row[0] = LaurentPoly::one();
    for (long long n = 0; n <= n_max; ++n) {
        for (long long j = std::min(n, k); j >= 1; --j) {
            // [n, j] = q^j [n-1, j] + [n-1, j-1]
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j)].shifted(j) + row[static_cast<std::size_t>(j - 1)];
        }
        if (n >= k) out[static_cast<std::size_t>(n)] = row[static_cast<std::size_t>(k)];
    }
    return out;
}

inline LaurentPoly q_binomial_fresh(long long n, long long k) {
    std::vector<LaurentPoly> row(static_cast<std::size_t>(k + 1));
    row[0] = LaurentPoly::one();
    for (long long m = 1; m <= n; ++m)
        for (long long j = std::min(m, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j)].shifted(j) + row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

}  // namespace detail

// Gaussian binomial coefficient, zero when k < 0 or k > n (which also covers
// n < 0). Computed by the Pascal recurrence -- always exact, no division.
// Small instances are kept in a thread-confined memo table so results are
// identical regardless of thread interleaving.
inline const LaurentPoly& q_binomial(long long n, long long k) {
    static const LaurentPoly kZero;
    if (k < 0 || k > n) return kZero;
    if (k > n - k) k = n - k;  // symmetry, smaller rolling row
    thread_local std::map<std::pair<long long, long long>, LaurentPoly> memo;
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, detail::q_binomial_fresh(n, k)).first;
    return it->second;
}

// Integer binomial coefficient, exact.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace qcat
