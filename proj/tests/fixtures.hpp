// Reference data for the worked examples used across the test suites.
#ifndef CONESEMI_TESTS_FIXTURES_HPP
#define CONESEMI_TESTS_FIXTURES_HPP

#include <algorithm>
#include <vector>

#include "conesemi/semigroup.hpp"

namespace fixtures {

using conesemi::CSemigroup;
using conesemi::ConePtr;
using conesemi::Vec;

inline ConePtr n2() { return conesemi::make_orthant(2); }
inline ConePtr cone11() { return conesemi::make_cone(2, {Vec{1, 0}, Vec{1, 1}}); }
inline ConePtr cone4153() { return conesemi::make_cone(2, {Vec{4, 1}, Vec{5, 3}}); }

// the twelve gap sets of EI((2,3)) over N^2
inline std::vector<std::vector<Vec>> ei23_gap_sets() {
    return {
        {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}},  // S1
        {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}},  // S2
        {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 3}},  // S3
        {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}},  // S4
        {{0, 1}, {0, 3}, {1, 0}, {1, 1}, {2, 1}},  // S5
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}},  // S6
        {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}},  // S7
        {{0, 1}, {0, 3}, {1, 0}, {1, 2}, {2, 1}},  // S8
        {{0, 1}, {0, 3}, {1, 1}, {1, 3}, {2, 1}},  // S9
        {{0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}},  // S10
        {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 1}},  // S11
        {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}},  // S12
    };
}

inline CSemigroup s1_23() { return CSemigroup::from_gaps(n2(), ei23_gap_sets()[0]); }
inline CSemigroup s6_23() { return CSemigroup::from_gaps(n2(), ei23_gap_sets()[5]); }

// the (4,3)-positioned but non-symmetric GNS of the first figure
inline CSemigroup fig_positioned_not_symmetric() {
    return CSemigroup::from_gaps(n2(), {{0, 1}, {0, 3}, {1, 0}, {1, 1}, {1, 2},
                                        {1, 3}, {2, 0}, {2, 1}, {4, 1}});
}

// cone{(4,1),(5,3)} semigroup with Minimals(X_S) = {(12,5),(13,5),(14,5)}
inline CSemigroup sec2_example() {
    return CSemigroup::from_gaps(cone4153(), {{2, 1}, {3, 1}, {6, 2}, {6, 3}, {7, 2}});
}

inline std::vector<Vec> sec2_msg() {
    return {{4, 1}, {4, 2}, {5, 2}, {5, 3}, {7, 3}, {7, 4}, {10, 3}, {11, 3}};
}

// the UESY semigroup primary positioned for both (7,5) and (7,2)
inline CSemigroup two_k_uesy() {
    return CSemigroup::from_gaps(
        cone11(), {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 2}});
}

// 19-gap GNS primary positioned for k=(6,5)
inline CSemigroup sec5_example() {
    return CSemigroup::from_gaps(
        n2(), {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4},
               {1, 5}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 0}, {3, 3}, {3, 4}, {4, 5}});
}

inline std::vector<Vec> sec5_msg() {
    return {{0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 10}, {0, 11}, {2, 0}, {2, 1}, {1, 6}, {1, 7},
            {3, 1}, {1, 8}, {3, 2}, {1, 9}, {1, 10}, {1, 11}, {3, 5}, {4, 3}, {4, 4}, {5, 0},
            {5, 4}};
}

inline std::vector<Vec> sec5_sg() {
    return {{1, 5}, {2, 2}, {2, 3}, {3, 0}, {3, 3}, {3, 4}, {4, 5}};
}

// 20-gap root of the tree for k=(11,5) over cone{(1,0),(1,1)}
inline CSemigroup sec6_tree_root() {
    return CSemigroup::from_gaps(
        cone11(), {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4},
                   {6, 5}, {4, 2}, {5, 3}, {6, 4}, {7, 5}, {3, 0}, {6, 3}, {7, 4}, {8, 4}, {9, 5}});
}

inline std::vector<Vec> sorted(std::vector<Vec> xs) {
    std::sort(xs.begin(), xs.end(), conesemi::GradedLexLess{});
    return xs;
}

}  // namespace fixtures

#endif
