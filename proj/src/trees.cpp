#include "limbforge/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "limbforge/error.hpp"

namespace limbforge {

CanonicalTree::CanonicalTree(int weight, std::vector<CanonicalTree> children)
    : weight_(weight), children_(std::move(children)) {
    if (weight_ < 1) {
        throw Error(ErrorCode::InvalidGraph, "tree vertex weight must be positive");
    }
    std::stable_sort(children_.begin(), children_.end());
    std::string bytes = "(" + std::to_string(weight_);
    for (const auto& c : children_) {
        bytes += c.code_.bytes();
        order_ += c.order_;
        total_weight_ += c.total_weight_;
    }
    total_weight_ += weight_ - 1;
    bytes += ')';
    code_ = CanonicalCode(std::move(bytes));
}

namespace {

void require_tree(const WeightedGraph& g) {
    if (!g.is_tree()) {
        throw Error(ErrorCode::NotATree, "graph is not a connected acyclic graph");
    }
}

// Builds the canonical tree of the component of `g` containing `root`,
// never crossing into `blocked` (an index, or npos).
CanonicalTree build_rooted(const WeightedGraph& g, const std::vector<std::vector<std::size_t>>& adj,
                           std::size_t root, std::size_t blocked) {
    const auto n = g.order();
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    if (blocked < n) seen[blocked] = 1;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const auto x = order[head];
        for (auto y : adj[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = x;
                order.push_back(y);
            }
        }
    }
    std::vector<std::vector<CanonicalTree>> kids(n);
    std::vector<CanonicalTree> built(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto x = *it;
        built[x] = CanonicalTree(g.vertices()[x].weight, std::move(kids[x]));
        if (x != root) kids[parent[x]].push_back(std::move(built[x]));
    }
    return std::move(built[root]);
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

CanonicalTree canonicalize_rooted(const WeightedGraph& tree) {
    if (!tree.root()) throw Error(ErrorCode::MissingRoot, "rooted tree has no root");
    return canonicalize_rooted_at(tree, *tree.root());
}

CanonicalTree canonicalize_rooted_at(const WeightedGraph& tree, VertexId root) {
    const auto r = tree.index_of(root);
    require_tree(tree);
    return build_rooted(tree, tree.adjacency(), r, kNone);
}

std::vector<CanonicalTree> canonical_rootings(const WeightedGraph& tree) {
    require_tree(tree);
    const auto adj = tree.adjacency();
    std::vector<CanonicalTree> out;
    out.reserve(tree.order());
    for (std::size_t i = 0; i < tree.order(); ++i) out.push_back(build_rooted(tree, adj, i, kNone));
    return out;
}

std::vector<VertexId> centroids(const WeightedGraph& tree) {
    require_tree(tree);
    const auto n = tree.order();
    const auto adj = tree.adjacency();
    std::vector<std::size_t> parent(n, n), order{0}, sub(n, 1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (auto y : adj[order[head]]) {
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = order[head];
                order.push_back(y);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (parent[*it] < n) sub[parent[*it]] += sub[*it];
    }
    std::vector<VertexId> out;
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t largest = n - sub[x];
        for (auto y : adj[x]) {
            if (parent[y] == x) largest = std::max(largest, sub[y]);
        }
        if (2 * largest <= n) out.push_back(tree.vertices()[x].id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CanonicalTree free_canonical_tree(const WeightedGraph& tree) {
    const auto cs = centroids(tree);
    auto best = canonicalize_rooted_at(tree, cs.front());
    for (std::size_t i = 1; i < cs.size(); ++i) {
        auto other = canonicalize_rooted_at(tree, cs[i]);
        if (other < best) best = std::move(other);
    }
    return best;
}

CanonicalCode canonicalize_free(const WeightedGraph& tree) { return free_canonical_tree(tree).code(); }

std::vector<CanonicalTree> root_forest(const CanonicalTree& tree) { return tree.children(); }

WeightedGraph to_graph(const CanonicalTree& tree, VertexId first_id) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    std::function<VertexId(const CanonicalTree&)> visit = [&](const CanonicalTree& t) {
        const VertexId id = first_id + static_cast<VertexId>(vs.size());
        vs.push_back({id, t.weight()});
        for (const auto& c : t.children()) es.emplace_back(id, visit(c));
        return id;
    };
    visit(tree);
    return WeightedGraph(std::move(vs), std::move(es), first_id);
}

std::pair<WeightedGraph, VertexId> attach_subtree(const WeightedGraph& host, VertexId at,
                                                  const CanonicalTree& subtree) {
    host.index_of(at);
    const VertexId first = host.max_id() + 1;
    const auto piece = to_graph(subtree, first);
    auto vs = host.vertices();
    vs.insert(vs.end(), piece.vertices().begin(), piece.vertices().end());
    auto es = host.edges();
    es.insert(es.end(), piece.edges().begin(), piece.edges().end());
    es.emplace_back(at, first);
    return {WeightedGraph(std::move(vs), std::move(es), host.root()), first};
}

std::vector<VertexId> component_beyond(const WeightedGraph& tree, VertexId at, VertexId toward) {
    const auto a = tree.index_of(at);
    const auto t = tree.index_of(toward);
    const auto adj = tree.adjacency();
    std::vector<char> seen(tree.order(), 0);
    seen[a] = seen[t] = 1;
    std::vector<std::size_t> stack{t};
    std::vector<VertexId> out;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        out.push_back(tree.vertices()[x].id);
        for (auto y : adj[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CanonicalTree> neighbor_subtrees(const WeightedGraph& tree, VertexId v) {
    require_tree(tree);
    const auto iv = tree.index_of(v);
    const auto adj = tree.adjacency();
    std::vector<CanonicalTree> out;
    for (auto u : adj[iv]) out.push_back(build_rooted(tree, adj, u, iv));
    return out;
}

namespace {

// Pool of trees sorted by (measure, code); `class_begin[m]` is the first
// index with measure m (class_begin has max_measure + 2 entries).
struct Pool {
    std::vector<CanonicalTree> trees;
    std::vector<std::size_t> class_begin;
};

// Emits every multiset (a nondecreasing index sequence into `pool`) whose
// measures sum to `target`, each part's measure satisfying `part_ok`.
void for_each_multiset(const Pool& pool, long target, const std::function<bool(long)>& part_ok,
                       const std::function<void(const std::vector<CanonicalTree>&)>& emit) {
    const long max_measure = static_cast<long>(pool.class_begin.size()) - 2;
    std::vector<CanonicalTree> chosen;
    std::function<void(std::size_t, long, long)> rec = [&](std::size_t start, long min_measure,
                                                          long remaining) {
        if (remaining == 0) {
            emit(chosen);
            return;
        }
        for (long m = min_measure; m <= std::min(remaining, max_measure); ++m) {
            // Later parts are at least as large as this one.
            if (remaining - m != 0 && remaining - m < m) continue;
            if (!part_ok(m)) continue;
            const auto begin = std::max(start, pool.class_begin[m]);
            const auto end = pool.class_begin[m + 1];
            for (std::size_t i = begin; i < end; ++i) {
                chosen.push_back(pool.trees[i]);
                rec(i, m, remaining - m);
                chosen.pop_back();
            }
        }
    };
    rec(0, 1, target);
}

Pool make_pool(const std::vector<std::vector<CanonicalTree>>& by_measure, long max_measure) {
    Pool pool;
    max_measure = std::max(0L, std::min(max_measure, static_cast<long>(by_measure.size()) - 1));
    pool.class_begin.assign(static_cast<std::size_t>(max_measure) + 2, 0);
    for (long m = 1; m <= max_measure; ++m) {
        pool.class_begin[m] = pool.trees.size();
        pool.trees.insert(pool.trees.end(), by_measure[m].begin(), by_measure[m].end());
    }
    pool.class_begin[max_measure + 1] = pool.trees.size();
    return pool;
}

std::vector<std::vector<CanonicalTree>> rooted_up_to(int n) {
    std::vector<std::vector<CanonicalTree>> by_size(static_cast<std::size_t>(std::max(n, 0)) + 1);
    if (n >= 1) by_size[1].push_back(leaf());
    for (int k = 2; k <= n; ++k) {
        const auto pool = make_pool(by_size, k - 1);
        for_each_multiset(pool, k - 1, [](long) { return true; },
                          [&](const std::vector<CanonicalTree>& kids) {
                              by_size[k].emplace_back(1, kids);
                          });
        std::sort(by_size[k].begin(), by_size[k].end());
    }
    return by_size;
}

std::vector<std::vector<CanonicalTree>> weighted_rooted_up_to(int total) {
    std::vector<std::vector<CanonicalTree>> by_weight(static_cast<std::size_t>(std::max(total, 0)) + 1);
    for (int k = 1; k <= total; ++k) {
        for (int w = 1; w <= k; ++w) {
            const auto pool = make_pool(by_weight, k - w);
            for_each_multiset(pool, k - w, [](long) { return true; },
                              [&](const std::vector<CanonicalTree>& kids) {
                                  by_weight[k].emplace_back(w, kids);
                              });
        }
        std::sort(by_weight[k].begin(), by_weight[k].end());
    }
    return by_weight;
}

}  // namespace

std::vector<CanonicalTree> enumerate_rooted(int n) {
    if (n < 1) return {};
    return rooted_up_to(n)[n];
}

std::vector<CanonicalTree> enumerate_free(int n) {
    if (n < 1) return {};
    if (n == 1) return {leaf()};
    const auto by_size = rooted_up_to(n - 1);
    std::vector<CanonicalTree> out;
    // Unicentroid: every child subtree has fewer than n/2 vertices.
    const auto pool = make_pool(by_size, (n - 1) / 2);
    for_each_multiset(pool, n - 1, [n](long m) { return 2 * m < n; },
                      [&](const std::vector<CanonicalTree>& kids) { out.emplace_back(1, kids); });
    // Bicentroid: two halves of n/2 vertices joined by the central edge.
    if (n % 2 == 0) {
        const auto& halves = by_size[n / 2];
        for (std::size_t i = 0; i < halves.size(); ++i) {
            for (std::size_t j = i; j < halves.size(); ++j) {
                auto a_kids = halves[i].children();
                a_kids.push_back(halves[j]);
                auto b_kids = halves[j].children();
                b_kids.push_back(halves[i]);
                CanonicalTree a(halves[i].weight(), std::move(a_kids));
                CanonicalTree b(halves[j].weight(), std::move(b_kids));
                out.push_back(std::min(a, b));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CanonicalTree> enumerate_weighted_rooted(int total_weight) {
    if (total_weight < 1) return {};
    return weighted_rooted_up_to(total_weight)[total_weight];
}

std::vector<CanonicalTree> enumerate_weighted_free(int total_weight) {
    std::set<CanonicalTree> seen;
    for (const auto& t : enumerate_weighted_rooted(total_weight)) {
        seen.insert(free_canonical_tree(to_graph(t)));
    }
    return {seen.begin(), seen.end()};
}

}  // namespace limbforge
