// Type-A weight/root lattice geometry in fundamental-weight coordinates:
// tilted height and order, cover relations, the phi_b isometry, quotient and
// remainder mod a, and lattice-point enumeration for the four region
// families (simplex, box slice, rotated box, full box).
//
// A point of L = Z^{a-1} is a plain integer vector of length a-1; tilted
// coordinates are a view, not a second storage format.
#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"

namespace qcat {

using Point = std::vector<int>;

class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

constexpr long long kDefaultPointBudget = 100'000'000;  // 1e8 points

// T(x) = x_1 + 2 x_2 + ... + (a-1) x_{a-1}.
inline long long tilted_height(const Point& p) {
    long long t = 0;
    for (std::size_t i = 0; i < p.size(); ++i) t += static_cast<long long>(i + 1) * p[i];
    return t;
}

inline long long coord_sum(const Point& p) {
    long long s = 0;
    for (int x : p) s += x;
    return s;
}

// Suffix sums are the coordinates in the tilted basis
// {w_1, w_2 - w_1, ..., w_{a-1} - w_{a-2}}.
inline std::vector<long long> to_tilted_coords(const Point& p) {
    std::vector<long long> y(p.size());
    long long s = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        s += p[i];
        y[i] = s;
    }
    return y;
}

inline Point from_tilted_coords(const std::vector<long long>& y) {
    Point p(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        long long next = i + 1 < y.size() ? y[i + 1] : 0;
        p[i] = static_cast<int>(y[i] - next);
    }
    return p;
}

// x <= y in the tilted partial order iff every suffix sum of x is <= the
// corresponding suffix sum of y.
inline bool tilted_leq(const Point& p, const Point& r) {
    if (p.size() != r.size()) throw std::invalid_argument("tilted_leq: rank mismatch");
    long long sp = 0, sr = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        sp += p[i];
        sr += r[i];
        if (sp > sr) return false;
    }
    return true;
}

// r covers p iff r - p is an element of the tilted basis.
inline bool is_cover(const Point& p, const Point& r) {
    if (p.size() != r.size()) throw std::invalid_argument("is_cover: rank mismatch");
    int plus = -1, minus = -1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int d = r[i] - p[i];
        if (d == 0) continue;
        if (d == 1 && plus < 0)
            plus = static_cast<int>(i);
        else if (d == -1 && minus < 0)
            minus = static_cast<int>(i);
        else
            return false;
    }
    if (plus < 0) return false;
    if (minus < 0) return plus == 0;      // difference is w_1
    return minus + 1 == plus;             // difference is w_{i+1} - w_i
}

// Mathematical mod: result in 0..a-1 also for negative heights.
inline int coset_index(int a, const Point& p) {
    long long t = tilted_height(p) % a;
    if (t < 0) t += a;
    return static_cast<int>(t);
}

inline bool is_root_point(int a, const Point& p) { return coset_index(a, p) == 0; }

// p = a*quo + rem with every rem coordinate in 0..a-1.
inline std::pair<Point, Point> quo_rem_mod_a(int a, const Point& p) {
    Point quo(p.size()), rem(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        int q = p[i] / a, r = p[i] % a;
        if (r < 0) {
            r += a;
            --q;
        }
        quo[i] = q;
        rem[i] = r;
    }
    return {quo, rem};
}

// phi_b(x) = (b - sum x_i, x_1, ..., x_{a-2}); shifts tilted height by b mod a.
inline Point phi(long long b, const Point& p) {
    Point r(p.size());
    r[0] = static_cast<int>(b - coord_sum(p));
    for (std::size_t i = 1; i < p.size(); ++i) r[i] = p[i - 1];
    return r;
}

// Enumeration descriptor for the four region families the identities use.
struct Region {
    enum class Kind { Simplex, BoxSlice, RotatedBox, Box };
    Kind kind = Kind::Box;
    long long b = 0;  // Simplex / RotatedBox dilation
    long long m = 0, n = 0;  // BoxSlice bounds on the coordinate sum
    int i = 0;        // RotatedBox vertex index

    static Region simplex(long long b) {
        if (b < 0) throw std::invalid_argument("Region::simplex: b must be >= 0");
        Region r;
        r.kind = Kind::Simplex;
        r.b = b;
        return r;
    }
    static Region box_slice(long long m, long long n) {
        Region r;
        r.kind = Kind::BoxSlice;
        r.m = m;
        r.n = n;
        return r;
    }
    static Region rotated_box(long long b, int i) {
        Region r;
        r.kind = Kind::RotatedBox;
        r.b = b;
        r.i = i;
        return r;
    }
    static Region box() { return Region{}; }
};

namespace detail {

// Number of points of {0..a-1}^{a-1} with coordinate sum exactly s, i.e. the
// coefficient of z^s in ([a]_z)^{a-1}.
inline std::vector<BigInt> box_layer_counts(int a) {
    std::vector<BigInt> layer{1};
    for (int i = 1; i < a; ++i) {
        std::vector<BigInt> next(layer.size() + a - 1);
        for (std::size_t s = 0; s < layer.size(); ++s)
            for (int x = 0; x < a; ++x) next[s + x] += layer[s];
        layer = std::move(next);
    }
    return layer;
}

inline BigInt predicted_point_count(int a, const Region& r) {
    switch (r.kind) {
        case Region::Kind::Simplex:
            return binomial(a - 1 + r.b, a - 1);
        case Region::Kind::BoxSlice: {
            auto layers = box_layer_counts(a);
            BigInt n = 0;
            long long lo = std::max(r.m, 0LL);
            long long hi = std::min<long long>(r.n, static_cast<long long>(layers.size()) - 1);
            for (long long s = lo; s <= hi; ++s) n += layers[static_cast<std::size_t>(s)];
            return n;
        }
        case Region::Kind::RotatedBox:
            if (r.i == 0) return boost::multiprecision::pow(BigInt(a), a - 1);
            return boost::multiprecision::pow(BigInt(a), a - 1);
        case Region::Kind::Box:
            return boost::multiprecision::pow(BigInt(a), a - 1);
    }
    return 0;
}

template <typename Fn>
void enum_simplex(int a, long long b, Fn&& fn) {
    Point p(a - 1, 0);
    std::function<void(int, long long)> rec = [&](int idx, long long left) {
        if (idx == a - 1) {
            fn(p);
            return;
        }
        for (long long x = 0; x <= left; ++x) {
            p[static_cast<std::size_t>(idx)] = static_cast<int>(x);
            rec(idx + 1, left - x);
        }
        p[static_cast<std::size_t>(idx)] = 0;
    };
    rec(0, b);
}

template <typename Fn>
void enum_box_slice(int a, long long m, long long n, Fn&& fn) {
    const int d = a - 1;
    Point p(d, 0);
    std::function<void(int, long long)> rec = [&](int idx, long long sum) {
        if (sum > n) return;
        long long rest = static_cast<long long>(d - idx) * (a - 1);
        if (sum + rest < m) return;
        if (idx == d) {
            fn(p);
            return;
        }
        for (int x = 0; x < a; ++x) {
            p[static_cast<std::size_t>(idx)] = x;
            rec(idx + 1, sum + x);
        }
        p[static_cast<std::size_t>(idx)] = 0;
    };
    rec(0, 0);
}

// Box_b^i for i >= 1: 0 <= x_j < a for j != i, and x_i makes the coordinate
// sum land in (b-a, b]. Exactly a values of x_i per choice of the others.
template <typename Fn>
void enum_rotated_box(int a, long long b, int i, Fn&& fn) {
    const int d = a - 1;
    Point p(d, 0);
    std::vector<Point> out;
    std::function<void(int, long long)> rec = [&](int idx, long long sum) {
        if (idx == d) {
            // sum excludes coordinate i-1; fill in its a admissible values.
            for (long long xi = b - a + 1 - sum; xi <= b - sum; ++xi) {
                p[static_cast<std::size_t>(i - 1)] = static_cast<int>(xi);
                out.push_back(p);
            }
            return;
        }
        if (idx == i - 1) {
            rec(idx + 1, sum);
            return;
        }
        for (int x = 0; x < a; ++x) {
            p[static_cast<std::size_t>(idx)] = x;
            rec(idx + 1, sum + x);
        }
        p[static_cast<std::size_t>(idx)] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    for (const auto& q : out) fn(q);
}

}  // namespace detail

// Streams every lattice point of the region in lexicographic order on weight
// coordinates. The point budget guards the enumeration path only; formula
// paths never enumerate.
template <typename Fn>
void for_each_point(int a, const Region& r, Fn&& fn,
                    long long point_budget = kDefaultPointBudget) {
    if (a < 1) throw std::invalid_argument("for_each_point: a must be >= 1");
    if (r.kind == Region::Kind::RotatedBox && (r.i < 0 || r.i > a - 1))
        throw std::invalid_argument("RotatedBox: need 0 <= i <= a-1");
    BigInt predicted = detail::predicted_point_count(a, r);
    if (predicted > point_budget)
        throw ResourceLimit("enumeration of " + predicted.str() + " points exceeds budget " +
                            std::to_string(point_budget));
    switch (r.kind) {
        case Region::Kind::Simplex:
            detail::enum_simplex(a, r.b, fn);
            break;
        case Region::Kind::BoxSlice:
            detail::enum_box_slice(a, r.m, r.n, fn);
            break;
        case Region::Kind::Box:
            detail::enum_box_slice(a, 0, static_cast<long long>(a) * (a - 1), fn);
            break;
        case Region::Kind::RotatedBox:
            if (r.i == 0)
                detail::enum_box_slice(a, 0, static_cast<long long>(a) * (a - 1), fn);
            else
                detail::enum_rotated_box(a, r.b, r.i, fn);
            break;
    }
}

inline std::vector<Point> enumerate(int a, const Region& r,
                                    long long point_budget = kDefaultPointBudget) {
    std::vector<Point> out;
    for_each_point(a, r, [&](const Point& p) { out.push_back(p); }, point_budget);
    return out;
}

// Sum of q^{T(x)} over a list of points.
inline LaurentPoly height_gen_poly(const std::vector<Point>& points) {
    std::map<long long, BigInt> acc;
    for (const auto& p : points) acc[tilted_height(p)] += 1;
    std::vector<LaurentPoly::Term> t(acc.begin(), acc.end());
    return LaurentPoly::from_terms(std::move(t));
}

// Same, streamed from a region without materializing the point list.
inline LaurentPoly height_gen_poly(int a, const Region& r,
                                   long long point_budget = kDefaultPointBudget) {
    std::map<long long, BigInt> acc;
    for_each_point(a, r, [&](const Point& p) { acc[tilted_height(p)] += 1; }, point_budget);
    std::vector<LaurentPoly::Term> t(acc.begin(), acc.end());
    return LaurentPoly::from_terms(std::move(t));
}

}  // namespace qcat
