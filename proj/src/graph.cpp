#include "limbforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "limbforge/error.hpp"

namespace limbforge {

WeightedGraph::WeightedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                             std::optional<VertexId> root)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), root_(root) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (v.weight < 1) {
            throw Error(ErrorCode::InvalidGraph,
                        "vertex " + std::to_string(v.id) + " has non-positive weight");
        }
        if (!index_.emplace(v.id, i).second) {
            throw Error(ErrorCode::InvalidGraph, "duplicate vertex id " + std::to_string(v.id));
        }
    }
    std::set<Edge> seen;
    for (auto& e : edges_) {
        if (!index_.contains(e.first) || !index_.contains(e.second)) {
            throw Error(ErrorCode::InvalidGraph, "edge endpoint does not exist: (" +
                                                     std::to_string(e.first) + "," +
                                                     std::to_string(e.second) + ")");
        }
        if (e.first == e.second) {
            throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(e.first));
        }
        if (e.first > e.second) std::swap(e.first, e.second);
        if (!seen.insert(e).second) {
            throw Error(ErrorCode::InvalidGraph, "duplicate edge (" + std::to_string(e.first) +
                                                     "," + std::to_string(e.second) + ")");
        }
    }
    if (root_ && !index_.contains(*root_)) {
        throw Error(ErrorCode::InvalidGraph, "root " + std::to_string(*root_) + " is not a vertex");
    }
}

bool WeightedGraph::has_vertex(VertexId id) const { return index_.contains(id); }

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges_.begin(), edges_.end(), Edge{u, v}) != edges_.end();
}

std::size_t WeightedGraph::index_of(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw Error(ErrorCode::UnknownVertex, "no vertex with id " + std::to_string(id));
    }
    return it->second;
}

long WeightedGraph::total_weight() const {
    long total = 0;
    for (const auto& v : vertices_) total += v.weight;
    return total;
}

VertexId WeightedGraph::max_id() const {
    VertexId m = -1;
    for (const auto& v : vertices_) m = std::max(m, v.id);
    return m;
}

std::vector<VertexId> WeightedGraph::ids() const {
    std::vector<VertexId> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) out.push_back(v.id);
    return out;
}

std::vector<std::vector<std::size_t>> WeightedGraph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const auto& [u, v] : edges_) {
        const auto iu = index_.at(u);
        const auto iv = index_.at(v);
        adj[iu].push_back(iv);
        adj[iv].push_back(iu);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<VertexId> WeightedGraph::neighbors(VertexId id) const {
    index_of(id);
    std::vector<VertexId> out;
    for (const auto& [u, v] : edges_) {
        if (u == id) out.push_back(v);
        if (v == id) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t WeightedGraph::degree(VertexId id) const { return neighbors(id).size(); }

std::vector<std::vector<VertexId>> WeightedGraph::components() const {
    const auto adj = adjacency();
    std::vector<int> comp(vertices_.size(), -1);
    std::vector<std::vector<VertexId>> out;
    // Visit in id order so components come out ordered by smallest id.
    std::vector<std::size_t> order(vertices_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vertices_[a].id < vertices_[b].id; });
    for (auto start : order) {
        if (comp[start] >= 0) continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<std::size_t> stack{start};
        comp[start] = c;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            out.back().push_back(vertices_[x].id);
            for (auto y : adj[x]) {
                if (comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool WeightedGraph::is_connected() const { return components().size() <= 1; }

bool WeightedGraph::is_forest() const {
    return edges_.size() + components().size() == vertices_.size();
}

WeightedGraph WeightedGraph::without_vertex(VertexId id) const {
    const VertexId ids[] = {id};
    return without_vertices(ids);
}

WeightedGraph WeightedGraph::without_vertices(std::span<const VertexId> ids) const {
    std::set<VertexId> drop;
    for (auto id : ids) {
        index_of(id);
        drop.insert(id);
    }
    std::vector<Vertex> vs;
    for (const auto& v : vertices_) {
        if (!drop.contains(v.id)) vs.push_back(v);
    }
    std::vector<Edge> es;
    for (const auto& e : edges_) {
        if (!drop.contains(e.first) && !drop.contains(e.second)) es.push_back(e);
    }
    std::optional<VertexId> r = root_;
    if (r && drop.contains(*r)) r.reset();
    return WeightedGraph(std::move(vs), std::move(es), r);
}

WeightedGraph WeightedGraph::without_edge(VertexId u, VertexId v) const {
    index_of(u);
    index_of(v);
    if (u > v) std::swap(u, v);
    std::vector<Edge> es;
    bool found = false;
    for (const auto& e : edges_) {
        if (e == Edge{u, v}) {
            found = true;
        } else {
            es.push_back(e);
        }
    }
    if (!found) {
        throw Error(ErrorCode::InvalidArgument,
                    "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return WeightedGraph(vertices_, std::move(es), root_);
}

WeightedGraph WeightedGraph::induced(std::span<const VertexId> ids) const {
    std::set<VertexId> keep(ids.begin(), ids.end());
    std::vector<VertexId> drop;
    for (const auto& v : vertices_) {
        if (!keep.contains(v.id)) drop.push_back(v.id);
    }
    for (auto id : keep) index_of(id);
    return without_vertices(drop);
}

WeightedGraph WeightedGraph::with_root(std::optional<VertexId> root) const {
    return WeightedGraph(vertices_, edges_, root);
}

WeightedGraph WeightedGraph::with_weight(VertexId id, int weight) const {
    auto vs = vertices_;
    vs[index_of(id)].weight = weight;
    return WeightedGraph(std::move(vs), edges_, root_);
}

WeightedGraph WeightedGraph::unweighted() const {
    auto vs = vertices_;
    for (auto& v : vs) v.weight = 1;
    return WeightedGraph(std::move(vs), edges_, root_);
}

WeightedGraph WeightedGraph::shifted(VertexId offset) const {
    auto vs = vertices_;
    for (auto& v : vs) v.id += offset;
    auto es = edges_;
    for (auto& e : es) {
        e.first += offset;
        e.second += offset;
    }
    std::optional<VertexId> r = root_;
    if (r) *r += offset;
    return WeightedGraph(std::move(vs), std::move(es), r);
}

std::pair<WeightedGraph, VertexId> disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
    VertexId offset = 0;
    const bool collides = std::any_of(b.vertices().begin(), b.vertices().end(),
                                      [&](const Vertex& v) { return a.has_vertex(v.id); });
    if (collides) {
        VertexId min_b = b.vertices().front().id;
        for (const auto& v : b.vertices()) min_b = std::min(min_b, v.id);
        offset = a.max_id() + 1 - min_b;
    }
    const auto shifted = b.shifted(offset);
    auto vs = a.vertices();
    vs.insert(vs.end(), shifted.vertices().begin(), shifted.vertices().end());
    auto es = a.edges();
    es.insert(es.end(), shifted.edges().begin(), shifted.edges().end());
    return {WeightedGraph(std::move(vs), std::move(es), a.root()), offset};
}

WeightedGraph make_graph(std::size_t n, std::span<const Edge> edges, std::optional<VertexId> root) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back({static_cast<VertexId>(i), 1});
    return WeightedGraph(std::move(vs), std::vector<Edge>(edges.begin(), edges.end()), root);
}

}  // namespace limbforge
