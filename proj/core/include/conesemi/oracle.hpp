#ifndef CONESEMI_ORACLE_HPP
#define CONESEMI_ORACLE_HPP

#include <string>
#include <vector>

#include "conesemi/forest.hpp"
#include "conesemi/semigroup.hpp"

namespace conesemi::oracle {

inline constexpr std::size_t kDefaultCap = 20;

// Every C-semigroup with gaps inside I_C(k) \ {0}, exhaustively, via the
// duplicate-free semigroup tree (gaps added in ascending term order through
// the current minimal generators). Hard-errors when |I_C(k)| exceeds cap.
std::vector<CSemigroup> enumerate_all(ConePtr c, const Vec& k, std::size_t cap = kDefaultCap,
                                      int jobs = 1);

// enumerate_all filtered by is_primary_positioned(·, k)
std::vector<CSemigroup> primary_set(ConePtr c, const Vec& k, std::size_t cap = kDefaultCap,
                                    int jobs = 1);

struct CompareReport {
    std::vector<CSemigroup> missing;  // oracle has them, forest does not
    std::vector<CSemigroup> extra;    // forest has them, oracle does not
    std::vector<std::string> beta_mismatches;

    bool ok() const { return missing.empty() && extra.empty() && beta_mismatches.empty(); }
    std::string str() const;
};

// Structured diff between the forest node set and the brute-force ground truth.
CompareReport compare(ConePtr c, const Vec& k, const TermOrder& o,
                      std::size_t cap = kDefaultCap, int jobs = 1);

}  // namespace conesemi::oracle

#endif
