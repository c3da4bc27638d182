#ifndef CONESEMI_IRREDUCIBLE_HPP
#define CONESEMI_IRREDUCIBLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "conesemi/positioned.hpp"
#include "conesemi/semigroup.hpp"

namespace conesemi {

enum class IrreducibleKind { Symmetric, PseudoSymmetric };

// I_C(k) split into the pairs {x, k-x} plus the fixed point k/2 when
// |I_C(k)| is odd. pairs[i].first is the graded-lex smaller member;
// the pair {0, k} comes first.
struct PairDecomposition {
    std::vector<std::pair<Vec, Vec>> pairs;
    std::optional<Vec> fixed_point;
};

PairDecomposition pair_decomposition(const Cone& c, const Vec& k);

// All irreducible C-semigroups of the given kind with Frobenius element k.
// Backtracks over the pair decomposition (exactly one member of each pair
// is a gap), pruning branches whose partial gap set already violates
// closure; every leaf is re-validated in full.
std::vector<CSemigroup> enumerate_irreducible(ConePtr c, const Vec& k, IrreducibleKind kind);

// Roots of the forest G(P(k)): primary positioned extensions T ∪ {k}
// (even |I_C(k)|) or T ∪ {k/2, k} (odd, filtered by k/2 ∈ C(S)) of the
// irreducibles with Frobenius element k. P(0) = {C}.
std::vector<CSemigroup> ei_set(ConePtr c, const Vec& k, const TermOrder& o,
                               std::vector<CSemigroup>* rejected = nullptr);

}  // namespace conesemi

#endif
