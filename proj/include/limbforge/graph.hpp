#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace limbforge {

using VertexId = int;

struct Vertex {
    VertexId id = 0;
    int weight = 1;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph with positive integer vertex weights and an
/// optional distinguished root. This is the interchange type for every
/// module: trees, limbs, fixtures and constructions all produce one.
///
/// Construction validates the invariants (unique ids, weights >= 1, edge
/// endpoints exist, no loops, no duplicate edges, root exists) and throws
/// `Error{InvalidGraph}` otherwise. Edges are stored with the smaller id first.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                  std::optional<VertexId> root = std::nullopt);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::optional<VertexId>& root() const noexcept { return root_; }

    std::size_t order() const noexcept { return vertices_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }

    bool has_vertex(VertexId id) const;
    bool has_edge(VertexId u, VertexId v) const;
    /// Position of `id` in `vertices()`; throws `UnknownVertex`.
    std::size_t index_of(VertexId id) const;
    int weight(VertexId id) const { return vertices_[index_of(id)].weight; }
    long total_weight() const;
    VertexId max_id() const;
    std::vector<VertexId> ids() const;

    /// Index-based adjacency lists, neighbours in ascending index order.
    std::vector<std::vector<std::size_t>> adjacency() const;
    std::vector<VertexId> neighbors(VertexId id) const;
    std::size_t degree(VertexId id) const;

    /// Connected components as sorted id lists, ordered by smallest id.
    std::vector<std::vector<VertexId>> components() const;
    bool is_connected() const;
    bool is_forest() const;
    bool is_tree() const { return !empty() && is_connected() && is_forest(); }

    WeightedGraph without_vertex(VertexId id) const;
    WeightedGraph without_vertices(std::span<const VertexId> ids) const;
    WeightedGraph without_edge(VertexId u, VertexId v) const;
    WeightedGraph induced(std::span<const VertexId> ids) const;
    WeightedGraph with_root(std::optional<VertexId> root) const;
    WeightedGraph with_weight(VertexId id, int weight) const;
    /// Same graph with every weight set to 1.
    WeightedGraph unweighted() const;
    /// Adds `offset` to every id.
    WeightedGraph shifted(VertexId offset) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::optional<VertexId> root_;
    std::map<VertexId, std::size_t> index_;
};

/// Disjoint union; the vertices of `b` are shifted past `a.max_id()` when
/// ids collide. Returns the union and the shift applied to `b`.
std::pair<WeightedGraph, VertexId> disjoint_union(const WeightedGraph& a, const WeightedGraph& b);

/// Tree of `n` unit-weight vertices 0..n-1 on a given edge list; convenience
/// for tests and fixtures.
WeightedGraph make_graph(std::size_t n, std::span<const Edge> edges,
                         std::optional<VertexId> root = std::nullopt);

}  // namespace limbforge
