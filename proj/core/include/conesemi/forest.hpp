#ifndef CONESEMI_FOREST_HPP
#define CONESEMI_FOREST_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conesemi/irreducible.hpp"
#include "conesemi/positioned.hpp"

namespace conesemi {

struct ForestNode {
    CSemigroup semigroup;
    std::optional<Vec> beta;  // absent exactly at roots
    int parent = -1;
    std::vector<int> children;
    int depth = 0;
};

// One rooted tree G(P_T(k)); nodes[0] is the root, ids follow BFS order
// with each node's children sorted ascending by the added element.
struct ForestTree {
    std::vector<ForestNode> nodes;
};

struct Forest {
    ConePtr cone;
    Vec k;
    TermOrder order;
    std::vector<ForestTree> trees;

    std::size_t node_count() const;
};

// Children of a root T of G(P(k)): T ∪ {x} for special gaps x outside
// M(T) ∪ Maximals(H(T)) with 2x ≻ k, 3x = k, or 4x = k.
std::vector<std::pair<Vec, CSemigroup>> root_children(const CSemigroup& t, const Vec& k,
                                                      const TermOrder& o);

// Children of a non-root vertex: x ≻ β(S), or x ≺ β(S) with every larger
// y ∈ B(S) satisfying y - x ∈ S or y = 2x.
std::vector<std::pair<Vec, CSemigroup>> node_children(const PositionedContext& ctx);

ForestTree build_tree(const CSemigroup& root, const Vec& k, const TermOrder& o);

Forest build_forest(ConePtr c, const Vec& k, const TermOrder& o, int jobs = 1);

// One primary positioned semigroup for k. Even |I_C(k)|: the larger-half
// symmetric semigroup extended by k. Odd: the explicit GNS construction;
// non-orthant cones are rejected, as are k in {2e_i, 4e_i} where no
// primary positioned GNS exists.
CSemigroup construct_primary(ConePtr c, const Vec& k, const TermOrder& o);

enum class EmitFormat { Text, Json, Dot };
EmitFormat parse_format(const std::string& name);

std::string emit(const Forest& f, EmitFormat format);

Forest forest_from_json(const std::string& text);

}  // namespace conesemi

#endif
