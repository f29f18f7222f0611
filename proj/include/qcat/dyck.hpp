// Rational Dyck paths and their statistics: area, maj on square paths, the
// sweep map, and the q,t-Catalan sum used to cross-validate the q-Catalan
// numbers under t = 1/q.
//
// Paths render as lowercase words like "uurrurrrurr".
#pragma once

#include <string>
#include <vector>

#include "bipoly.hpp"
#include "catalan.hpp"

namespace qcat {

class DimensionMismatch : public std::runtime_error {
public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DyckPath {
    int a = 0, b = 0;        // a up steps, b right steps, path to (b, a)
    std::string word;        // over {'u', 'r'}, length a + b
};

// Weakly above the diagonal from (0,0) to (b,a): a*x <= b*y at every lattice
// point of the path.
inline bool is_valid_dyck(const DyckPath& p) {
    if (static_cast<int>(p.word.size()) != p.a + p.b) return false;
    long long x = 0, y = 0;
    for (char s : p.word) {
        if (s == 'u')
            ++y;
        else if (s == 'r')
            ++x;
        else
            return false;
        if (static_cast<long long>(p.a) * x > static_cast<long long>(p.b) * y) return false;
    }
    return x == p.b && y == p.a;
}

inline DyckPath make_dyck(int a, int b, std::string word) {
    DyckPath p{a, b, std::move(word)};
    if (!is_valid_dyck(p)) throw std::invalid_argument("make_dyck: not a valid (a,b)-Dyck path");
    return p;
}

constexpr long long kDefaultPathBudget = 1'000'000;

// All (a,b)-Dyck paths in lexicographic word order ('r' < 'u').
inline std::vector<DyckPath> enumerate_dyck(int a, int b,
                                            long long path_budget = kDefaultPathBudget) {
    if (a < 1 || b < 1) throw std::invalid_argument("enumerate_dyck: a, b must be >= 1");
    std::vector<DyckPath> out;
    std::string word;
    word.reserve(static_cast<std::size_t>(a + b));
    std::function<void(int, int)> rec = [&](int x, int y) {
        if (x == b && y == a) {
            if (static_cast<long long>(out.size()) >= path_budget)
                throw ResourceLimit("enumerate_dyck: path budget " +
                                    std::to_string(path_budget) + " exceeded");
            out.push_back(DyckPath{a, b, word});
            return;
        }
        if (x < b && static_cast<long long>(a) * (x + 1) <= static_cast<long long>(b) * y) {
            word.push_back('r');
            rec(x + 1, y);
            word.pop_back();
        }
        if (y < a) {
            word.push_back('u');
            rec(x, y + 1);
            word.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// Number of full unit squares between the path and the diagonal. Integer
// cross-products only: the cell [x,x+1] x [y-1,y] lies weakly above the
// diagonal iff b*(y-1) >= a*(x+1), and below the path iff x is at or right
// of the y-th up step.
inline long long area(const DyckPath& p) {
    long long total = 0, x = 0, y = 0;
    for (char s : p.word) {
        if (s == 'u') {
            ++y;
            long long cap = floor_div(static_cast<long long>(p.b) * (y - 1), p.a) - 1;
            cap = std::min<long long>(cap, p.b - 1);
            if (cap >= x) total += cap - x + 1;
        } else {
            ++x;
        }
    }
    return total;
}

// Sweep map: each step carries the running label after taking it (+b per up,
// -a per right, starting from 0); the image is the steps sorted by strictly
// decreasing label. Labels are distinct exactly when gcd(a,b) = 1.
inline DyckPath sweep(const DyckPath& p) {
    require_coprime(p.a, p.b);
    std::vector<std::pair<long long, char>> steps;
    steps.reserve(p.word.size());
    long long label = 0;
    for (char s : p.word) {
        label += s == 'u' ? p.b : -static_cast<long long>(p.a);
        steps.emplace_back(label, s);
    }
    std::sort(steps.begin(), steps.end(),
              [](const auto& s, const auto& t) { return s.first > t.first; });
    std::string word;
    word.reserve(p.word.size());
    for (const auto& [l, s] : steps) word.push_back(s);
    DyckPath out{p.a, p.b, std::move(word)};
    if (!is_valid_dyck(out)) throw std::logic_error("sweep: image is not a Dyck path");
    return out;
}

// Major index of a square path: the sum of x+y over the right-up corners.
inline long long maj(const DyckPath& p) {
    if (p.a != p.b) throw DimensionMismatch("maj: defined for square paths only");
    long long total = 0, x = 0, y = 0;
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        if (p.word[i] == 'u')
            ++y;
        else
            ++x;
        if (i + 1 < p.word.size() && p.word[i] == 'r' && p.word[i + 1] == 'u') total += x + y;
    }
    return total;
}

// Cat(a,b)_{q,t} = sum over paths of q^{area(P)} t^{area(sweep(P))}.
inline BiPoly qt_catalan(int a, int b, long long path_budget = kDefaultPathBudget) {
    require_coprime(a, b);
    BiPoly sum;
    for (const auto& p : enumerate_dyck(a, b, path_budget))
        sum.add_term(1, area(p), area(sweep(p)));
    return sum;
}

}  // namespace qcat
