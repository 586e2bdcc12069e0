#pragma once

#include <optional>
#include <vector>

#include "limbforge/bigint.hpp"
#include "limbforge/trees.hpp"

namespace limbforge {

/// Commutative monomial of trees, kept sorted; empty = the unit 1.
using Forest = std::vector<CanonicalTree>;

/// coefficient * (left forest) (x) (right tree or 1).
struct ForestTerm {
    BigInt coefficient;
    Forest left;
    std::optional<CanonicalTree> right;
};

/// Every antichain of `t` (including the empty one), as sorted preorder
/// positions; position 0 is the root and the numbering matches
/// `to_graph(t, 0)`.
std::vector<std::vector<int>> antichains(const CanonicalTree& t);
/// 1 + prod over children, without listing them.
BigInt count_antichains(const CanonicalTree& t);

/// Sum over antichains S of (prod_{v in S} t_v) (x) (t minus those subtrees).
/// S = {} gives 1 (x) t and S = {root} gives t (x) 1. Equal terms are merged,
/// output sorted by (left codes, right code).
std::vector<ForestTerm> coproduct(const CanonicalTree& t);

/// (Delta (x) id) Delta(t) == (id (x) Delta) Delta(t), Delta extended
/// multiplicatively to forests.
bool check_coassociativity(const CanonicalTree& t);
/// Applying the counit to either leg of Delta(t) gives back t.
bool check_counit(const CanonicalTree& t);
/// Total weight of every term equals the weight of t.
bool check_grading(const CanonicalTree& t);

}  // namespace limbforge
