// Standard sets, ribbons, the greedy standard-partition algorithm, ribbon
// partition search, and Johnson statistics with their verification suite:
// Catalan property, coset decomposition, box and rotated-box identities, the
// Pochhammer lemma and the q-Brion identity.
#pragma once

#include <deque>
#include <map>
#include <optional>

#include "catalan.hpp"

namespace qcat {

class NotRootPoint : public std::runtime_error {
public:
    explicit NotRootPoint(const std::string& what) : std::runtime_error(what) {}
};

class MalformedPartition : public std::runtime_error {
public:
    explicit MalformedPartition(const std::string& what) : std::runtime_error(what) {}
};

inline std::string point_str(const Point& p, bool angle = false) {
    std::string s = angle ? "<" : "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    s += angle ? ">" : ")";
    return s;
}

// A Johnson statistic, stored on the a^{a-2} root-lattice representatives in
// the fundamental box and evaluated everywhere else by periodicity
// J(x + a*y) = J(x) + a*T(y).
struct JohnsonStatistic {
    int a = 0;
    std::map<Point, long long> table;  // key: representative in R n Box
};

inline long long eval_j(const JohnsonStatistic& J, const Point& p) {
    if (!is_root_point(J.a, p))
        throw NotRootPoint("eval_j: " + point_str(p) + " is not a root point for a = " +
                           std::to_string(J.a));
    auto [quo, rem] = quo_rem_mod_a(J.a, p);
    auto it = J.table.find(rem);
    if (it == J.table.end())
        throw std::logic_error("eval_j: representative " + point_str(rem) + " missing from table");
    return it->second + static_cast<long long>(J.a) * tilted_height(quo);
}

// Sum of q^{J(x)} over the root points of a region.
inline LaurentPoly j_gen_poly(const JohnsonStatistic& J, const Region& region,
                              long long point_budget = kDefaultPointBudget) {
    std::map<long long, BigInt> acc;
    for_each_point(J.a, region,
                   [&](const Point& p) {
                       if (is_root_point(J.a, p)) acc[eval_j(J, p)] += 1;
                   },
                   point_budget);
    std::vector<LaurentPoly::Term> t(acc.begin(), acc.end());
    return LaurentPoly::from_terms(std::move(t));
}

// |S| = a and the tilted heights are k, k+1, ..., k+a-1 for some k.
inline bool is_standard_set(int a, const std::vector<Point>& s) {
    if (static_cast<int>(s.size()) != a) return false;
    std::vector<long long> h;
    h.reserve(s.size());
    for (const auto& p : s) h.push_back(tilted_height(p));
    std::sort(h.begin(), h.end());
    for (std::size_t i = 1; i < h.size(); ++i)
        if (h[i] != h[0] + static_cast<long long>(i)) return false;
    return true;
}

// A standard set that is a saturated chain in the tilted order.
inline bool is_ribbon(int a, const std::vector<Point>& s) {
    if (!is_standard_set(a, s)) return false;
    std::vector<Point> sorted = s;
    std::sort(sorted.begin(), sorted.end(), [](const Point& p, const Point& r) {
        return tilted_height(p) < tilted_height(r);
    });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!is_cover(sorted[i - 1], sorted[i])) return false;
    return true;
}

using Partition = std::vector<std::vector<Point>>;

struct GreedyResult {
    bool stuck = false;
    long long stuck_height = 0;  // the empty height class, when stuck
    Partition blocks;
};

// Repeatedly take the minimal-height point (lexicographic tie-break), then
// the lex-least available point at each of the next a-1 heights.
inline GreedyResult greedy_standard_partition(int a, const std::vector<Point>& points) {
    std::map<long long, std::deque<Point>> buckets;
    {
        std::map<long long, std::vector<Point>> tmp;
        for (const auto& p : points) tmp[tilted_height(p)].push_back(p);
        for (auto& [h, v] : tmp) {
            std::sort(v.begin(), v.end());
            buckets.emplace(h, std::deque<Point>(v.begin(), v.end()));
        }
    }
    GreedyResult result;
    while (!buckets.empty()) {
        long long h0 = buckets.begin()->first;
        std::vector<Point> block;
        block.reserve(static_cast<std::size_t>(a));
        for (long long h = h0; h < h0 + a; ++h) {
            auto it = buckets.find(h);
            if (it == buckets.end() || it->second.empty()) {
                result.stuck = true;
                result.stuck_height = h;
                return result;
            }
            block.push_back(it->second.front());
            it->second.pop_front();
            if (it->second.empty()) buckets.erase(it);
        }
        result.blocks.push_back(std::move(block));
    }
    return result;
}

// Each block must contain exactly one root point; it is assigned the minimal
// tilted height of its block.
inline JohnsonStatistic partition_to_johnson(int a, const Partition& blocks) {
    JohnsonStatistic J;
    J.a = a;
    for (const auto& block : blocks) {
        const Point* root = nullptr;
        long long min_h = 0;
        bool first = true;
        for (const auto& p : block) {
            long long h = tilted_height(p);
            if (first || h < min_h) min_h = h;
            first = false;
            if (is_root_point(a, p)) {
                if (root) throw MalformedPartition("block with two root points");
                root = &p;
            }
        }
        if (!root) throw MalformedPartition("block without a root point");
        auto [quo, rem] = quo_rem_mod_a(a, *root);
        if (*root != rem)
            throw MalformedPartition("root point " + point_str(*root) +
                                     " outside the fundamental box");
        if (!J.table.emplace(*root, min_h).second)
            throw MalformedPartition("root point " + point_str(*root) + " assigned twice");
    }
    return J;
}

// The column statistic J(x) = 2 x_2 + ... + (a-1) x_{a-1}: satisfies the Box
// identity by construction, the Catalan property is not guaranteed.
inline JohnsonStatistic column_statistic(int a, long long point_budget = kDefaultPointBudget) {
    JohnsonStatistic J;
    J.a = a;
    for_each_point(a, Region::box(),
                   [&](const Point& p) {
                       if (!is_root_point(a, p)) return;
                       long long v = 0;
                       for (std::size_t i = 1; i < p.size(); ++i)
                           v += static_cast<long long>(i + 1) * p[i];
                       J.table[p] = v;
                   },
                   point_budget);
    return J;
}

// The a = 4 ribbon partition cut out by the hyperplanes x_i = 2k - 1/2 and
// x_1+x_2+x_3 = odd + 1/2: every cell of that arrangement holds exactly four
// lattice points forming a ribbon. Restricted to the fundamental box this
// gives 16 ribbons.
inline Partition a4_alcove_partition() {
    const int a = 4;
    std::map<std::pair<Point, bool>, std::vector<Point>> cells;
    for_each_point(a, Region::box(), [&](const Point& p) {
        Point cube{p[0] / 2, p[1] / 2, p[2] / 2};
        long long split = 2 * (cube[0] + cube[1] + cube[2]) + 1;
        bool upper = coord_sum(p) > split;
        cells[{cube, upper}].push_back(p);
    });
    Partition blocks;
    for (auto& [key, pts] : cells) blocks.push_back(std::move(pts));
    return blocks;
}

inline JohnsonStatistic a4_alcove_statistic() {
    return partition_to_johnson(4, a4_alcove_partition());
}

// ---- ribbon partition search -------------------------------------------

struct RibbonSearchResult {
    enum class Status { Found, NotFound, Timeout, Counted };
    Status status = Status::NotFound;
    Partition partition;           // filled for Found
    BigInt count = 0;              // filled for Counted
    unsigned long long nodes = 0;  // search nodes visited
};

constexpr unsigned long long kDefaultNodeBudget = 10'000'000;

namespace detail {

class RibbonSearcher {
public:
    RibbonSearcher(int a, const std::vector<Point>& points, unsigned long long node_budget)
        : a_(a), budget_(node_budget) {
        pts_ = points;
        std::sort(pts_.begin(), pts_.end(), [](const Point& p, const Point& r) {
            long long hp = tilted_height(p), hr = tilted_height(r);
            return hp != hr ? hp < hr : p < r;
        });
        for (std::size_t i = 0; i < pts_.size(); ++i) index_[pts_[i]] = i;
        covered_.assign(pts_.size(), false);
        if (!pts_.empty()) {
            h_lo_ = tilted_height(pts_.front());
            hist_.assign(static_cast<std::size_t>(tilted_height(pts_.back()) - h_lo_ + 1), 0);
            for (const auto& p : pts_) ++hist_[static_cast<std::size_t>(tilted_height(p) - h_lo_)];
        }
        basis_.resize(static_cast<std::size_t>(a_ - 1));
        for (int j = 0; j < a_ - 1; ++j) {
            Point v(static_cast<std::size_t>(a_ - 1), 0);
            v[static_cast<std::size_t>(j)] = 1;
            if (j > 0) v[static_cast<std::size_t>(j - 1)] = -1;
            basis_[static_cast<std::size_t>(j)] = v;
        }
    }

    RibbonSearchResult find_first() {
        RibbonSearchResult r;
        find_all_ = false;
        timeout_ = false;
        current_.clear();
        bool found = dfs(0);
        r.nodes = nodes_;
        if (timeout_)
            r.status = RibbonSearchResult::Status::Timeout;
        else if (found) {
            r.status = RibbonSearchResult::Status::Found;
            r.partition = best_;
        } else {
            r.status = RibbonSearchResult::Status::NotFound;
        }
        return r;
    }

    RibbonSearchResult count_all() {
        RibbonSearchResult r;
        find_all_ = true;
        timeout_ = false;
        count_ = 0;
        current_.clear();
        dfs(0);
        r.nodes = nodes_;
        if (timeout_) {
            r.status = RibbonSearchResult::Status::Timeout;
        } else {
            r.status = RibbonSearchResult::Status::Counted;
            r.count = count_;
        }
        return r;
    }

private:
    int a_;
    unsigned long long budget_;
    std::vector<Point> pts_;
    std::map<Point, std::size_t> index_;
    std::vector<char> covered_;
    std::vector<long long> hist_;
    long long h_lo_ = 0;
    std::vector<Point> basis_;
    Partition current_;
    Partition best_;
    BigInt count_ = 0;
    unsigned long long nodes_ = 0;
    bool find_all_ = false;
    bool timeout_ = false;

    // Residual histogram must tile by runs of a consecutive heights, i.e.
    // the quotient by [a]_q must stay non-negative and divide exactly.
    bool residual_feasible() const {
        std::vector<long long> open(static_cast<std::size_t>(a_), 0);
        long long active = 0;
        for (std::size_t k = 0; k < hist_.size() + static_cast<std::size_t>(a_); ++k) {
            long long closing = open[k % static_cast<std::size_t>(a_)];
            active -= closing;
            open[k % static_cast<std::size_t>(a_)] = 0;
            long long n_k = k < hist_.size() ? hist_[k] : 0;
            long long start = n_k - active;
            if (start < 0) return false;
            open[k % static_cast<std::size_t>(a_)] = start;
            active += start;
        }
        return active == 0;
    }

    void take(std::size_t i) {
        covered_[i] = true;
        --hist_[static_cast<std::size_t>(tilted_height(pts_[i]) - h_lo_)];
    }
    void untake(std::size_t i) {
        covered_[i] = false;
        ++hist_[static_cast<std::size_t>(tilted_height(pts_[i]) - h_lo_)];
    }

    // Extend the chain upward by cover steps; on full length, prune by the
    // residual histogram and recurse into the next ribbon. Returns true when
    // a full partition was found and the search should stop (find-first).
    bool extend_chain(std::vector<std::size_t>& chain, std::size_t base_scan) {
        if (++nodes_ > budget_) {
            timeout_ = true;
            return false;
        }
        if (static_cast<int>(chain.size()) == a_) {
            if (!residual_feasible()) return false;
            std::vector<Point> block;
            block.reserve(chain.size());
            for (std::size_t i : chain) block.push_back(pts_[i]);
            current_.push_back(std::move(block));
            bool done = dfs(base_scan);
            current_.pop_back();
            return done;
        }
        const Point& top = pts_[chain.back()];
        std::vector<std::size_t> nexts;
        for (const auto& v : basis_) {
            Point cand(top.size());
            for (std::size_t i = 0; i < top.size(); ++i)
                cand[i] = top[i] + v[i];
            auto it = index_.find(cand);
            if (it != index_.end() && !covered_[it->second]) nexts.push_back(it->second);
        }
        std::sort(nexts.begin(), nexts.end());  // deterministic branch order
        for (std::size_t n : nexts) {
            chain.push_back(n);
            take(n);
            bool done = extend_chain(chain, base_scan);
            untake(n);
            chain.pop_back();
            if (done || timeout_) return done;
        }
        return false;
    }

    bool dfs(std::size_t scan_from) {
        std::size_t first = scan_from;
        while (first < pts_.size() && covered_[first]) ++first;
        if (first == pts_.size()) {
            if (find_all_) {
                ++count_;
                return false;
            }
            best_ = current_;
            return true;
        }
        // The minimal uncovered point (height, then lex) must be the bottom
        // of its ribbon: everything strictly below it is already covered.
        std::vector<std::size_t> chain{first};
        take(first);
        bool done = extend_chain(chain, first + 1);
        untake(first);
        return done;
    }
};

}  // namespace detail

inline RibbonSearchResult ribbon_partition_search(int a, const std::vector<Point>& points,
                                                  unsigned long long node_budget = kDefaultNodeBudget) {
    if (points.size() % static_cast<std::size_t>(a) != 0)
        throw std::invalid_argument("ribbon_partition_search: |points| must be divisible by a");
    return detail::RibbonSearcher(a, points, node_budget).find_first();
}

inline RibbonSearchResult count_ribbon_partitions(int a, const std::vector<Point>& points,
                                                  unsigned long long node_budget = kDefaultNodeBudget) {
    if (points.size() % static_cast<std::size_t>(a) != 0)
        throw std::invalid_argument("count_ribbon_partitions: |points| must be divisible by a");
    return detail::RibbonSearcher(a, points, node_budget).count_all();
}

// ---- identity suite ------------------------------------------------------

// (R n bDelta)_J == Cat(a,b)_q, by direct enumeration of the simplex.
inline bool verify_catalan_property(const JohnsonStatistic& J, long long b,
                                    long long point_budget = kDefaultPointBudget) {
    require_coprime(J.a, b);
    return j_gen_poly(J, Region::simplex(b), point_budget) == cat_q(J.a, b);
}

// Coset form: Cat(a,b)_q == sum over representatives x of
// q^{J(x)} * [a-1+floor((b-sum x)/a), a-1]_{q^a}. Pure periodicity turns the
// simplex sum into this finite sum, so it is exact for every coprime b.
inline LaurentPoly coset_decomposition_gen(const JohnsonStatistic& J, long long b) {
    const int a = J.a;
    // Group representatives by (coordinate sum, J) so each q^a-binomial is
    // multiplied once per class.
    std::map<std::pair<long long, long long>, BigInt> classes;
    for (const auto& [p, j] : J.table) classes[{coord_sum(p), j}] += 1;
    LaurentPoly sum;
    std::map<long long, std::vector<LaurentPoly::Term>> by_floor;
    for (const auto& [key, count] : classes)
        by_floor[floor_div(b - key.first, a)].emplace_back(key.second, count);
    for (auto& [j, terms] : by_floor) {
        const LaurentPoly& binom = q_binomial(a - 1 + j, a - 1);
        if (binom.is_zero()) continue;
        sum += binom.substitute_power(a) * LaurentPoly::from_terms(std::move(terms));
    }
    return sum;
}

inline bool verify_coset_decomposition(const JohnsonStatistic& J, long long b) {
    require_coprime(J.a, b);
    return coset_decomposition_gen(J, b) == cat_q(J.a, b);
}

// Right side of the rotated-box identity:
// q^{b*i - (a-1)*i(i+1)/2} / [a]_q * prod_{k=1}^{i} [a]_{q^k}
//                                  * prod_{k=1}^{a-1-i} [a]_{q^k}.
inline LaurentPoly rotated_box_rhs(int a, long long b, int i) {
    LaurentPoly prod = LaurentPoly::one();
    for (int k = 1; k <= i; ++k) prod *= q_int(a).substitute_power(k);
    for (int k = 1; k <= a - 1 - i; ++k) prod *= q_int(a).substitute_power(k);
    LaurentPoly quotient = exact_div(prod, q_int(a), "rotated_box_rhs");
    return quotient.shifted(b * i - static_cast<long long>(a - 1) * i * (i + 1) / 2);
}

// (R n Box_b^i)_J == rotated_box_rhs(a, b, i); i = 0 is the unrotated Box
// identity [a]_{q^2} ... [a]_{q^{a-1}}, independent of b.
inline bool verify_box_identities(const JohnsonStatistic& J, long long b, int i,
                                  long long point_budget = kDefaultPointBudget) {
    require_coprime(J.a, b);
    if (i < 0 || i > J.a - 1) throw std::invalid_argument("verify_box_identities: bad i");
    LaurentPoly lhs = j_gen_poly(J, Region::rotated_box(b, i), point_budget);
    LaurentPoly rhs = i == 0 ? rotated_box_rhs(J.a, 0, 0) : rotated_box_rhs(J.a, b, i);
    return lhs == rhs;
}

// The q-Pochhammer lemma with u specialized to q^m, both sides multiplied by
// (q;q)_{a-1} to stay inside Laurent polynomials:
//   sum_{S subset {0..a-1}\{i}} (-1)^{#S} q^{a*sum(S)} (q^{m-a#S}; q)_{a-1}
//   == q^{m*i - (a-1)*i(i+1)/2 - i} prod_{k<=i}[a]_{q^k}
//      prod_{k<=a-1-i}[a]_{q^k} (q;q)_{a-1}.
inline bool lemma_pochhammer_identity(int a, int i, long long m) {
    if (a < 2 || i < 0 || i > a - 1) throw std::invalid_argument("lemma_pochhammer_identity");
    LaurentPoly lhs;
    std::vector<int> universe;
    for (int j = 0; j < a; ++j)
        if (j != i) universe.push_back(j);
    for (unsigned mask = 0; mask < (1u << universe.size()); ++mask) {
        int size = 0;
        long long sum = 0;
        for (std::size_t t = 0; t < universe.size(); ++t)
            if (mask & (1u << t)) {
                ++size;
                sum += universe[t];
            }
        LaurentPoly term = q_pochhammer(m - static_cast<long long>(a) * size, a - 1)
                               .shifted(static_cast<long long>(a) * sum);
        if (size % 2 == 0)
            lhs += term;
        else
            lhs -= term;
    }
    LaurentPoly rhs = LaurentPoly::one();
    for (int k = 1; k <= i; ++k) rhs *= q_int(a).substitute_power(k);
    for (int k = 1; k <= a - 1 - i; ++k) rhs *= q_int(a).substitute_power(k);
    rhs *= q_pochhammer(1, a - 1);
    rhs = rhs.shifted(m * i - static_cast<long long>(a - 1) * i * (i + 1) / 2 - i);
    return lhs == rhs;
}

// q-Brion for the simplex bDelta: with vertex numerators
// N_i = (R n Box_b^i)_J and denominators D_i = prod_{j != i} (1 - q^{a(j-i)}),
// the identity sum_i N_i / D_i == Cat(a,b)_q holds as rational functions.
// Denominators are cleared symbolically: with
// D = prod_{d=1}^{a-1} (1-q^{ad})(1-q^{-ad}) the check is
// sum_i N_i * (D / D_i) == Cat(a,b)_q * D, all in Laurent polynomials.
inline bool verify_brion(const JohnsonStatistic& J, long long b,
                         long long point_budget = kDefaultPointBudget) {
    require_coprime(J.a, b);
    const int a = J.a;
    auto factor = [&](long long e) {
        return LaurentPoly::one() - LaurentPoly::monomial(1, e);
    };
    LaurentPoly lhs;
    for (int i = 0; i < a; ++i) {
        LaurentPoly n_i = j_gen_poly(J, Region::rotated_box(b, i), point_budget);
        // D / D_i picks up the factors absent from vertex i's denominator.
        LaurentPoly cofactor = LaurentPoly::one();
        for (int d = a - i; d <= a - 1; ++d) cofactor *= factor(static_cast<long long>(a) * d);
        for (int d = i + 1; d <= a - 1; ++d) cofactor *= factor(-static_cast<long long>(a) * d);
        lhs += n_i * cofactor;
    }
    LaurentPoly rhs = cat_q(a, b);
    for (int d = 1; d <= a - 1; ++d) {
        rhs *= factor(static_cast<long long>(a) * d);
        rhs *= factor(-static_cast<long long>(a) * d);
    }
    return lhs == rhs;
}

}  // namespace qcat
