#pragma once

#include <map>
#include <optional>
#include <vector>

#include "limbforge/graph.hpp"
#include "limbforge/polynomial.hpp"

namespace limbforge {

/// det(I*(x) - A) where I* is diagonal with x^{w(i)}; with `weighted` false
/// every weight is taken as 1, giving det(xI - A). Forests go through the
/// tree recursion, everything else through the determinant engine.
IntPolynomial char_poly(const WeightedGraph& g, bool weighted = false);
/// Always the fraction-free elimination over Z[x].
IntPolynomial char_poly_determinant(const WeightedGraph& g, bool weighted = false);
/// Leaf-to-root recursion on a tree; throws `NotATree`.
IntPolynomial char_poly_tree(const WeightedGraph& tree, bool weighted = true);

/// Both sides of an identity and whether they agree.
struct IdentityCheck {
    IntPolynomial lhs;
    IntPolynomial rhs;
    bool holds = false;
};

// The identity checks evaluate every polynomial with the determinant engine,
// so they test it rather than the tree recursion derived from them.

/// phi(G1 u G2) against phi(G1) phi(G2).
IdentityCheck check_union_identity(const WeightedGraph& g1, const WeightedGraph& g2, bool weighted = false);
/// phi(G) against phi(G - e) - phi(G - {u, v}); throws `NotACutEdge`.
IdentityCheck check_cut_edge_identity(const WeightedGraph& g, const Edge& e, bool weighted = false);
/// phi'(G) against sum_i w(i) x^{w(i)-1} phi(G - i).
IdentityCheck check_derivative_identity(const WeightedGraph& g, bool weighted = false);

/// Weighted characteristic polynomial of the 1-sum of `h` at `u` and `k` at
/// `v`, from the 1-sum formula alone:
///   phi(H-u) phi(K) + phi(H) phi(K-v) + (x^w - x^{w1} - x^{w2}) phi(H-u) phi(K-v),
/// with w = `merged_weight` (default: the weight of `u` in `h`).
IntPolynomial one_sum_char_poly(const WeightedGraph& h, VertexId u, const WeightedGraph& k, VertexId v,
                                std::optional<int> merged_weight = std::nullopt);

struct CospectralClass {
    std::vector<VertexId> vertices;
    IntPolynomial deleted_poly;
};

/// Partition of the vertices by phi(G - v), classes ordered by smallest id.
std::vector<CospectralClass> cospectral_vertices(const WeightedGraph& g, bool weighted = false);

constexpr std::size_t kMaxOrbitSearchOrder = 30;

/// Orbits of the automorphism group (weights must be preserved when
/// `respect_weights`), each sorted, ordered by smallest id. Forests use
/// rooted canonical codes at any size; other graphs use colour refinement
/// with backtracking and throw `TooLarge` above 30 vertices.
std::vector<std::vector<VertexId>> similarity_orbits(const WeightedGraph& g, bool respect_weights = true);
bool are_similar(const WeightedGraph& g, VertexId u, VertexId v, bool respect_weights = true);

/// Isomorphism of weighted graphs. Forests compare canonical codes; other
/// graphs need at most 30 vertices (`TooLarge`).
bool are_isomorphic(const WeightedGraph& a, const WeightedGraph& b, bool respect_weights = true);
/// Vertex map a -> b realising an isomorphism, if any (same size limit).
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const WeightedGraph& a, const WeightedGraph& b,
                                                             bool respect_weights = true);

/// The 9-vertex tree: path 1..8 with 9 pendant at 3. Its vertices 2 and 5
/// are cospectral and not similar.
WeightedGraph schwenk_tree();
constexpr VertexId kSchwenkA = 2;
constexpr VertexId kSchwenkB = 5;

/// If some vertex v of weight 1 carries the Schwenk tree rooted at a as a
/// limb (its unit-weight branches at v), returns the tree with that limb
/// replaced by the rooting at b. The result is checked to be cospectral
/// (weighted when `weighted`). An occurrence producing a non-isomorphic
/// tree is preferred. With `either_direction` the rooting at b is also
/// looked for and swapped back to a. Returns nothing for non-trees or when
/// no vertex carries the limb.
std::optional<WeightedGraph> schwenk_mate(const WeightedGraph& tree, bool weighted = false,
                                          bool either_direction = false);

}  // namespace limbforge
