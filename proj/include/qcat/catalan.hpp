// Rational Catalan and q-Catalan numbers, q-Catalan germs (fast
// inclusion-exclusion path and brute enumeration oracle), box-slice
// generating functions, and the non-coprime family built from Ramanujan
// sums.
#pragma once

#include <numeric>
#include <vector>

#include "lattice.hpp"
#include "parallel.hpp"

namespace qcat {

class NotCoprime : public std::runtime_error {
public:
    NotCoprime(long long a, long long b)
        : std::runtime_error("expected coprime arguments, got gcd(" + std::to_string(a) + "," +
                             std::to_string(b) + ") = " + std::to_string(std::gcd(a, b))) {}
};

inline void require_coprime(long long a, long long b) {
    if (std::gcd(a, b) != 1) throw NotCoprime(a, b);
}

// Cat(a,b) = C(a-1+b, a-1) / a, exact.
inline BigInt cat_count(int a, long long b) {
    require_coprime(a, b);
    if (b < 1) throw std::invalid_argument("cat_count: b must be >= 1");
    BigInt n = binomial(a - 1 + b, a - 1);
    BigInt q, r;
    boost::multiprecision::divide_qr(n, BigInt(a), q, r);
    if (r != 0) throw std::logic_error("cat_count: binomial not divisible by a");
    return q;
}

// Extended rational q-Catalan: q-binomial(a-1+b, a-1) / [a]_q whenever the
// binomial vanishes or divides. Arguments b <= 0 give 0 via the vanishing
// binomial; a failed division is a theory violation and aborts loudly.
inline LaurentPoly cat_q_extended(int a, long long b) {
    const LaurentPoly& binom = q_binomial(a - 1 + b, a - 1);
    if (binom.is_zero()) return {};
    return exact_div(binom, q_int(a),
                     "cat_q_extended(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

// Cat(a,b)_q = q-binomial(a-1+b, a-1) / [a]_q for coprime a, b.
inline LaurentPoly cat_q(int a, long long b) {
    require_coprime(a, b);
    if (b < 1) throw std::invalid_argument("cat_q: b must be >= 1");
    return cat_q_extended(a, b);
}

// Largest c' < c with gcd(a, c') = 1; may be <= 0 (prev_coprime(a, 1) = -1).
inline long long prev_coprime(int a, long long c) {
    require_coprime(a, c);
    for (long long x = c - 1;; --x)
        if (std::gcd<long long>(a, x) == 1) return x;
}

namespace detail {

// (Box[m,n])_q by the product formula: the coefficient of z^s in
// prod_i [a]_{q^i z} is the height generating function of the layer with
// coordinate sum s. No enumeration.
inline std::vector<LaurentPoly> box_layer_polys(int a) {
    std::vector<LaurentPoly> layers{LaurentPoly::one()};
    for (int i = 1; i < a; ++i) {
        std::vector<LaurentPoly> next(layers.size() + a - 1);
        for (std::size_t s = 0; s < layers.size(); ++s) {
            if (layers[s].is_zero()) continue;
            for (int x = 0; x < a; ++x)
                next[s + x] += layers[s].shifted(static_cast<long long>(i) * x);
        }
        layers = std::move(next);
    }
    return layers;
}

}  // namespace detail

// Height generating function of Box[m,n], computed by formula (exempt from
// the enumeration budget).
inline LaurentPoly box_slice_gen(int a, long long m, long long n) {
    auto layers = detail::box_layer_polys(a);
    LaurentPoly sum;
    long long lo = std::max(m, 0LL);
    long long hi = std::min<long long>(n, static_cast<long long>(layers.size()) - 1);
    for (long long s = lo; s <= hi; ++s) sum += layers[static_cast<std::size_t>(s)];
    return sum;
}

// Shared per-rank state for germ computation: the column of extended
// q-Catalan polynomials D_m = Cat(a,m)_q for coprime m up to m_max, plus the
// subset-collapsed vertex weights
//   W_s = e_s(q^a, ..., q^{(a-1)a}) = q^{a s(s+1)/2} * [C(a-1,s)]_{q^a}.
// Immutable once built, so germ entries can be evaluated in parallel.
class GermEngine {
public:
    GermEngine(int a, long long m_max) : a_(a), m_max_(std::max(m_max, 0LL)) {
        auto col = detail::q_binomial_column(a_ - 1, a_ - 1 + m_max_);
        const LaurentPoly qa = q_int(a_);
        d_.resize(static_cast<std::size_t>(m_max_ + 1));
        for (long long m = 1; m <= m_max_; ++m)
            if (std::gcd<long long>(a_, m) == 1)
                d_[static_cast<std::size_t>(m)] =
                    exact_div(col[static_cast<std::size_t>(a_ - 1 + m)], qa,
                              "cat_q_extended(" + std::to_string(a_) + "," + std::to_string(m) + ")");
        w_.resize(static_cast<std::size_t>(a_));
        for (long long s = 0; s < a_; ++s)
            w_[static_cast<std::size_t>(s)] =
                q_binomial(a_ - 1, s).substitute_power(a_).shifted(a_ * s * (s + 1) / 2);
    }

    int rank() const { return a_; }
    long long m_max() const { return m_max_; }

    // H(n) = (Box intersect nDelta)_q / [a]_q
    //      = sum_s (-1)^s W_s Cat(a, n - a*s)_q   (vanishing terms dropped).
    LaurentPoly box_cap_simplex_quotient(long long n) const {
        LaurentPoly h;
        for (long long s = 0; s < a_; ++s) {
            long long m = n - a_ * s;
            if (m < 1) break;
            const LaurentPoly& d = d_.at(static_cast<std::size_t>(m));
            LaurentPoly term = w_[static_cast<std::size_t>(s)] * d;
            if (s % 2 == 0)
                h += term;
            else
                h -= term;
        }
        return h;
    }

    // Cat((a;c))_q = H(c) - H(c').
    LaurentPoly germ(long long c) const {
        require_coprime(a_, c);
        if (c < 1 || c > static_cast<long long>(a_ - 1) * (a_ - 1)) return {};
        long long cp = prev_coprime(a_, c);
        LaurentPoly g = box_cap_simplex_quotient(c);
        if (cp >= 1) g -= box_cap_simplex_quotient(cp);
        return g;
    }

private:
    int a_;
    long long m_max_;
    std::vector<LaurentPoly> d_;  // indexed by m; empty at non-coprime m
    std::vector<LaurentPoly> w_;
};

// q-Catalan germ via the vertex inclusion-exclusion with height shifts
// q^{a*sum(I)}, collapsed over subset sizes. Zero outside 1 <= c <= (a-1)^2.
inline LaurentPoly germ(int a, long long c) {
    require_coprime(a, c);
    if (c < 1 || c > static_cast<long long>(a - 1) * (a - 1)) return {};
    return GermEngine(a, c).germ(c);
}

// Oracle route: enumerate the slice Box[c'+1, c], take the height generating
// function, divide by [a]_q. Budgeted; practical for a <= 7.
inline LaurentPoly germ_brute(int a, long long c,
                              long long point_budget = kDefaultPointBudget) {
    require_coprime(a, c);
    if (c < 1 || c > static_cast<long long>(a - 1) * (a - 1)) return {};
    long long cp = prev_coprime(a, c);
    LaurentPoly slice = height_gen_poly(a, Region::box_slice(cp + 1, c), point_budget);
    if (slice.is_zero()) return {};
    return exact_div(slice, q_int(a),
                     "germ_brute(" + std::to_string(a) + "," + std::to_string(c) + ")");
}

struct GermTable {
    int a = 0;
    std::vector<std::pair<long long, LaurentPoly>> entries;  // ascending c
};

inline std::vector<long long> coprime_upto(int a, long long n) {
    std::vector<long long> out;
    for (long long c = 1; c <= n; ++c)
        if (std::gcd<long long>(a, c) == 1) out.push_back(c);
    return out;
}

inline GermTable germ_table(int a, int jobs = 1) {
    if (a < 2) throw std::invalid_argument("germ_table: a must be >= 2");
    const long long c_max = static_cast<long long>(a - 1) * (a - 1);
    GermEngine engine(a, c_max);
    auto cs = coprime_upto(a, c_max);
    GermTable table;
    table.a = a;
    table.entries.resize(cs.size());
    // Consecutive germs share H values; precompute all H(n) in parallel,
    // then take adjacent differences.
    std::vector<LaurentPoly> h(cs.size());
    parallel_for_index(jobs, cs.size(), [&](std::size_t i) {
        h[i] = engine.box_cap_simplex_quotient(cs[i]);
    });
    for (std::size_t i = 0; i < cs.size(); ++i) {
        LaurentPoly g = h[i];
        if (i > 0) g -= h[i - 1];
        table.entries[i] = {cs[i], std::move(g)};
    }
    return table;
}

// First Proposition identity: the germs sum to prod_{k=2}^{a-1} [a]_{q^k}.
inline bool germ_sum_check(int a, int jobs = 1) {
    GermTable t = germ_table(a, jobs);
    LaurentPoly sum;
    for (const auto& [c, g] : t.entries) sum += g;
    LaurentPoly expected = LaurentPoly::one();
    for (int k = 2; k < a; ++k) expected *= q_int(a).substitute_power(k);
    return sum == expected;
}

inline long long floor_div(long long x, long long y) {
    long long q = x / y, r = x % y;
    return (r != 0 && ((r < 0) != (y < 0))) ? q - 1 : q;
}

// Second Proposition identity, evaluated: sum_c germ(a,c) *
// [a-1+floor((b-c)/a), a-1]_{q^a}; equals Cat(a,b)_q for coprime b.
inline LaurentPoly germ_reconstruction(int a, long long b, const GermTable& table) {
    require_coprime(a, b);
    LaurentPoly sum;
    for (const auto& [c, g] : table.entries) {
        long long j = floor_div(b - c, a);
        const LaurentPoly& binom = q_binomial(a - 1 + j, a - 1);
        if (binom.is_zero() || g.is_zero()) continue;
        sum += g * binom.substitute_power(a);
    }
    return sum;
}

inline LaurentPoly germ_reconstruction(int a, long long b) {
    return germ_reconstruction(a, b, germ_table(a));
}

// ---- non-coprime family ----------------------------------------------

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int moebius(long long n) {
    int mu = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Ramanujan sum c_d(l) = sum_{s | gcd(d,l)} mu(d/s) * s, with gcd(d,0) = d.
inline long long ramanujan_sum(long long d, long long l) {
    if (d < 1) throw std::invalid_argument("ramanujan_sum: d must be >= 1");
    long long g = std::gcd(d, l < 0 ? -l : l);
    if (l == 0) g = d;
    long long sum = 0;
    for (long long s : divisors(g)) sum += moebius(d / s) * s;
    return sum;
}

// q-analogue with [s]_q in place of s.
inline LaurentPoly q_ramanujan_sum(long long d, long long l) {
    if (d < 1) throw std::invalid_argument("q_ramanujan_sum: d must be >= 1");
    long long g = std::gcd(d, l < 0 ? -l : l);
    if (l == 0) g = d;
    LaurentPoly sum;
    for (long long s : divisors(g)) {
        int mu = moebius(d / s);
        if (mu == 1)
            sum += q_int(s);
        else if (mu == -1)
            sum -= q_int(s);
    }
    return sum;
}

// Cat(a,b;k) = #(R_k intersect bDelta) by the Elashvili-Jibladze-Pataraia
// formula.
inline BigInt cat_count_k(long long a, long long b, long long k) {
    if (a < 1 || b < 1) throw std::invalid_argument("cat_count_k: a, b must be >= 1");
    BigInt sum = 0;
    for (long long d : divisors(std::gcd(a, b)))
        sum += BigInt(ramanujan_sum(d, k)) * binomial(a / d + b / d, a / d);
    BigInt q, r;
    boost::multiprecision::divide_qr(sum, BigInt(a + b), q, r);
    if (r != 0) throw std::logic_error("cat_count_k: sum not divisible by a+b");
    return q;
}

// Reiner-Stanton-White q-analogue; NotDivisible here would falsify their
// Corollary 10.2, so the certificate is allowed to escape.
inline LaurentPoly cat_q_k(long long a, long long b, long long k) {
    if (a < 1 || b < 1) throw std::invalid_argument("cat_q_k: a, b must be >= 1");
    LaurentPoly sum;
    for (long long d : divisors(std::gcd(a, b))) {
        LaurentPoly c = q_ramanujan_sum(d, k);
        if (c.is_zero()) continue;
        sum += c * q_binomial(a / d + b / d, a / d).substitute_power(d);
    }
    return exact_div(sum, q_int(a + b),
                     "cat_q_k(" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(k) + ")");
}

}  // namespace qcat
