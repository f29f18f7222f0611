// Golden data for the distinguished a = 4 ribbon partition of the
// fundamental box: 16 ribbons, each listed top-down by tilted height, with
// the expected statistic value of its root point.
#pragma once

#include <vector>

#include "qcat/lattice.hpp"

namespace qcat_test {

struct A4Row {
    std::vector<qcat::Point> points;  // descending tilted height
    long long j;
};

inline const std::vector<A4Row>& a4_golden_rows() {
    static const std::vector<A4Row> rows = {
        {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, 0},
        {{{2, 0, 1}, {2, 1, 0}, {3, 0, 0}, {2, 0, 0}}, 2},
        {{{1, 1, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 3},
        {{{0, 2, 1}, {0, 3, 0}, {1, 2, 0}, {0, 2, 0}}, 4},
        {{{0, 0, 3}, {0, 1, 2}, {1, 0, 2}, {0, 0, 2}}, 6},
        {{{3, 1, 1}, {2, 1, 1}, {3, 0, 1}, {3, 1, 0}}, 5},
        {{{2, 2, 1}, {2, 3, 0}, {3, 2, 0}, {2, 2, 0}}, 6},
        {{{1, 3, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 0}}, 7},
        {{{2, 0, 3}, {2, 1, 2}, {3, 0, 2}, {2, 0, 2}}, 8},
        {{{1, 1, 3}, {0, 1, 3}, {1, 0, 3}, {1, 1, 2}}, 9},
        {{{0, 2, 3}, {0, 3, 2}, {1, 2, 2}, {0, 2, 2}}, 10},
        {{{3, 3, 1}, {2, 3, 1}, {3, 2, 1}, {3, 3, 0}}, 9},
        {{{3, 1, 3}, {2, 1, 3}, {3, 0, 3}, {3, 1, 2}}, 11},
        {{{2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {2, 2, 2}}, 12},
        {{{1, 3, 3}, {0, 3, 3}, {1, 2, 3}, {1, 3, 2}}, 13},
        {{{3, 3, 3}, {2, 3, 3}, {3, 2, 3}, {3, 3, 2}}, 15},
    };
    return rows;
}

}  // namespace qcat_test
