#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "limbforge/graph.hpp"

namespace limbforge {

/// Isomorphism-invariant key for a (weighted) rooted tree. The bytes are the
/// nested encoding `(` weight child-codes... `)` with children sorted, so two
/// rooted weighted trees are isomorphic iff their codes are equal. The byte
/// order gives the total order used for multisets and stream ordering.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const noexcept { return bytes_; }

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        return a.bytes_.compare(b.bytes_) <=> 0;
    }

private:
    std::string bytes_;
};

/// Rooted tree in canonical nested form: a root weight plus the child
/// subtrees sorted by canonical code. Immutable value type.
///
/// Unweighted trees are weight-1 trees throughout.
class CanonicalTree {
public:
    /// Single vertex of weight 1.
    CanonicalTree() : CanonicalTree(1) {}
    explicit CanonicalTree(int weight, std::vector<CanonicalTree> children = {});

    int weight() const noexcept { return weight_; }
    const std::vector<CanonicalTree>& children() const noexcept { return children_; }
    const CanonicalCode& code() const noexcept { return code_; }
    /// Number of vertices.
    std::size_t order() const noexcept { return order_; }
    long total_weight() const noexcept { return total_weight_; }
    bool is_leaf() const noexcept { return children_.empty(); }

    friend bool operator==(const CanonicalTree& a, const CanonicalTree& b) {
        return a.code_ == b.code_;
    }
    friend std::strong_ordering operator<=>(const CanonicalTree& a, const CanonicalTree& b) {
        return a.code_ <=> b.code_;
    }

private:
    int weight_ = 1;
    std::vector<CanonicalTree> children_;
    CanonicalCode code_;
    std::size_t order_ = 1;
    long total_weight_ = 1;
};

inline CanonicalTree leaf(int weight = 1) { return CanonicalTree(weight); }

/// Canonical form of a rooted tree given as a graph with a root.
/// Throws `MissingRoot` or `NotATree`.
CanonicalTree canonicalize_rooted(const WeightedGraph& tree);
/// Canonical form of `tree` rooted at `root` (any stored root is ignored).
CanonicalTree canonicalize_rooted_at(const WeightedGraph& tree, VertexId root);
/// Canonical rooted form at every vertex, in `tree.vertices()` order.
std::vector<CanonicalTree> canonical_rootings(const WeightedGraph& tree);

/// Centroid vertices (one or two), located by vertex count alone.
std::vector<VertexId> centroids(const WeightedGraph& tree);
/// Canonical centroid rooting of a free tree: the tree rooted at its
/// centroid, or the smaller of the two rootings for a bicentroid. Its code
/// is the free canonical code.
CanonicalTree free_canonical_tree(const WeightedGraph& tree);
CanonicalCode canonicalize_free(const WeightedGraph& tree);

/// F(T): the child subtrees left after deleting the root, as a sorted multiset.
std::vector<CanonicalTree> root_forest(const CanonicalTree& tree);

/// Materialises a canonical tree with preorder ids `first_id`, `first_id+1`, ...
/// and the root set to `first_id`.
WeightedGraph to_graph(const CanonicalTree& tree, VertexId first_id = 0);

/// Adds a copy of `subtree` to `host`, joining its root to `at` by an edge.
/// Fresh ids start after `host.max_id()`. Returns the new graph and the id
/// given to the subtree root.
std::pair<WeightedGraph, VertexId> attach_subtree(const WeightedGraph& host, VertexId at,
                                                  const CanonicalTree& subtree);
/// Ids of the component of `tree - at` that contains `toward` (a neighbour of `at`).
std::vector<VertexId> component_beyond(const WeightedGraph& tree, VertexId at, VertexId toward);
/// For every neighbour u of `v`: the component of `tree - v` containing u,
/// rooted at u, in canonical form, ordered like `tree.vertices()`.
std::vector<CanonicalTree> neighbor_subtrees(const WeightedGraph& tree, VertexId v);

/// One representative per isomorphism class of n-vertex rooted trees
/// (unit weights), in canonical-code order.
std::vector<CanonicalTree> enumerate_rooted(int n);
/// One representative per class of n-vertex free trees, each given by its
/// canonical centroid rooting, in canonical-code order.
std::vector<CanonicalTree> enumerate_free(int n);
/// Weighted rooted trees whose vertex weights sum to `total_weight`.
std::vector<CanonicalTree> enumerate_weighted_rooted(int total_weight);
/// Weighted free trees of the given total weight, as centroid rootings.
std::vector<CanonicalTree> enumerate_weighted_free(int total_weight);

}  // namespace limbforge
