#include "limbforge/verify/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace limbforge::oracle {

namespace {

using Adj = std::vector<std::vector<int>>;

Adj adjacency(const PlainTree& t) {
    Adj adj(static_cast<std::size_t>(t.n));
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::string code_from(const PlainTree& t, const Adj& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int u : adj[v]) {
        if (u != parent) kids.push_back(code_from(t, adj, u, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(t.weight_of(v)) + ":";
    for (auto& k : kids) s += k;
    return s + ")";
}

std::vector<int> centre(const PlainTree& t, const Adj& adj) {
    std::vector<int> deg(static_cast<std::size_t>(t.n));
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    int left = t.n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            for (int u : adj[v]) {
                if (--deg[u] == 1) next.push_back(u);
            }
        }
        layer = std::move(next);
    }
    return layer;
}

// Positive compositions of `total` into `parts` parts.
void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& emit) {
    if (parts == 0) {
        if (total == 0) emit();
        return;
    }
    for (int x = 1; x <= total - (parts - 1); ++x) {
        cur.push_back(x);
        compositions(total - x, parts - 1, cur, emit);
        cur.pop_back();
    }
}

std::vector<PlainTree> weighted_trees(int total, bool rooted) {
    std::map<std::string, PlainTree> seen;
    for (int m = 1; m <= total; ++m) {
        for (const auto& shape : rooted ? rooted_shapes(m) : free_shapes(m)) {
            std::vector<int> cur;
            compositions(total, m, cur, [&] {
                PlainTree t = shape;
                t.weight = cur;
                seen.emplace(rooted ? ahu_rooted(t, t.root) : ahu_free(t), t);
            });
        }
    }
    std::vector<PlainTree> out;
    for (auto& [k, t] : seen) out.push_back(t);
    return out;
}

std::vector<std::string> child_codes(const PlainTree& t, const Adj& adj, int v, int parent) {
    std::vector<std::string> out;
    for (int u : adj[v]) {
        if (u != parent) out.push_back(code_from(t, adj, u, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> parents(const Adj& adj, int root) {
    std::vector<int> parent(adj.size(), -2);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            }
        }
    }
    return parent;
}

}  // namespace

WeightedGraph to_weighted_graph(const PlainTree& t) {
    std::vector<Vertex> vs;
    for (int v = 0; v < t.n; ++v) vs.push_back({v, t.weight_of(v)});
    std::vector<Edge> es(t.edges.begin(), t.edges.end());
    std::optional<VertexId> root;
    if (t.root >= 0) root = t.root;
    return WeightedGraph(vs, es, root);
}

PlainTree decode_pruefer(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int x : seq) ++count[x];
    PlainTree t;
    t.n = n;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int x : seq) {
        int leaf = 0;
        while (used[leaf] || count[leaf] > 0) ++leaf;
        t.edges.emplace_back(leaf, x);
        used[leaf] = true;
        --count[x];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (a < 0) {
            a = v;
        } else {
            t.edges.emplace_back(a, v);
            break;
        }
    }
    return t;
}

std::string ahu_rooted(const PlainTree& t, int root) { return code_from(t, adjacency(t), root, -1); }

std::string ahu_free(const PlainTree& t) {
    const auto adj = adjacency(t);
    std::string best;
    for (int c : centre(t, adj)) {
        auto s = code_from(t, adj, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<PlainTree> rooted_shapes(int n, bool all_labelings) {
    std::map<std::string, PlainTree> seen;
    auto take = [&](const PlainTree& t) {
        for (int r = 0; r < t.n; ++r) {
            PlainTree rt = t;
            rt.root = r;
            seen.emplace(ahu_rooted(t, r), rt);
        }
    };
    if (all_labelings) {
        for_each_pruefer_tree(n, take);
    } else {
        for_each_sorted_pruefer_tree(n, take);
    }
    std::vector<PlainTree> out;
    for (auto& [k, t] : seen) out.push_back(t);
    return out;
}

std::vector<PlainTree> free_shapes(int n, bool all_labelings) {
    std::map<std::string, PlainTree> seen;
    auto take = [&](const PlainTree& t) { seen.emplace(ahu_free(t), t); };
    if (all_labelings) {
        for_each_pruefer_tree(n, take);
    } else {
        for_each_sorted_pruefer_tree(n, take);
    }
    std::vector<PlainTree> out;
    for (auto& [k, t] : seen) out.push_back(t);
    return out;
}

std::vector<PlainTree> weighted_rooted_trees(int total) { return weighted_trees(total, true); }
std::vector<PlainTree> weighted_free_trees(int total) { return weighted_trees(total, false); }

bool carries_pattern(const PlainTree& host, int v, const PlainTree& pattern, PatternMode mode) {
    const auto adj = adjacency(host);
    const auto padj = adjacency(pattern);
    if (mode == PatternMode::maximal) {
        if (host.root < 0) throw std::invalid_argument("maximal pattern needs a rooted host");
        const auto parent = parents(adj, host.root);
        return code_from(host, adj, v, parent[v]) == code_from(pattern, padj, pattern.root, -1);
    }
    if (host.weight_of(v) != pattern.weight_of(pattern.root)) return false;
    const int parent = host.root < 0 ? -1 : parents(adj, host.root)[v];
    const auto have = child_codes(host, adj, v, parent);
    const auto need = child_codes(pattern, padj, pattern.root, -1);
    return std::includes(have.begin(), have.end(), need.begin(), need.end());
}

bool avoids_pattern(const PlainTree& host, const PlainTree& pattern, PatternMode mode) {
    for (int v = 0; v < host.n; ++v) {
        if (carries_pattern(host, v, pattern, mode)) return false;
    }
    return true;
}

std::size_t count_avoiding(int n, const PlainTree& pattern, PatternMode mode, bool weighted, bool free_host) {
    std::vector<PlainTree> hosts;
    if (weighted) {
        hosts = free_host ? weighted_free_trees(n) : weighted_rooted_trees(n);
    } else {
        hosts = free_host ? free_shapes(n) : rooted_shapes(n);
    }
    std::size_t count = 0;
    for (const auto& h : hosts) count += avoids_pattern(h, pattern, mode) ? 1 : 0;
    return count;
}

namespace {

struct Dense {
    int n = 0;
    std::vector<int> weight;
    std::vector<std::vector<char>> adj;
};

Dense dense(const WeightedGraph& g, bool weighted) {
    Dense d;
    d.n = static_cast<int>(g.order());
    d.adj.assign(static_cast<std::size_t>(d.n), std::vector<char>(static_cast<std::size_t>(d.n), 0));
    for (const auto& v : g.vertices()) d.weight.push_back(weighted ? v.weight : 1);
    for (auto [a, b] : g.edges()) {
        auto i = g.index_of(a), j = g.index_of(b);
        d.adj[i][j] = d.adj[j][i] = 1;
    }
    return d;
}

bool maps(const Dense& a, const Dense& b, const std::vector<int>& p) {
    for (int i = 0; i < a.n; ++i) {
        if (a.weight[i] != b.weight[p[i]]) return false;
        for (int j = i + 1; j < a.n; ++j) {
            if (a.adj[i][j] != b.adj[p[i]][p[j]]) return false;
        }
    }
    return true;
}

}  // namespace

bool brute_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const auto da = dense(a, true), db = dense(b, true);
    std::vector<int> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (maps(da, db, p)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

std::vector<std::vector<VertexId>> brute_orbits(const WeightedGraph& g) {
    const auto d = dense(g, true);
    std::vector<int> rep(g.order());
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (!maps(d, d, p)) continue;
        for (int i = 0; i < d.n; ++i) {
            int a = find(i), b = find(p[i]);
            if (a != b) rep[std::max(a, b)] = std::min(a, b);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<int, std::vector<VertexId>> groups;
    for (int i = 0; i < d.n; ++i) groups[find(i)].push_back(g.vertices()[i].id);
    std::vector<std::vector<VertexId>> out;
    for (auto& [r, ids] : groups) {
        std::sort(ids.begin(), ids.end());
        out.push_back(ids);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntPolynomial cofactor_char_poly(const WeightedGraph& g, bool weighted) {
    const auto d = dense(g, weighted);
    const int n = d.n;
    if (n > 20) throw std::invalid_argument("cofactor expansion limited to 20 vertices");
    std::map<unsigned, IntPolynomial> memo;
    std::function<IntPolynomial(unsigned)> det = [&](unsigned mask) -> IntPolynomial {
        if (mask == 0) return IntPolynomial(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const int row = n - __builtin_popcount(mask);
        IntPolynomial sum;
        int before = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            IntPolynomial entry;
            if (j == row) {
                entry = IntPolynomial::monomial(d.weight[row]);
            } else if (d.adj[row][j]) {
                entry = IntPolynomial(-1);
            }
            if (!entry.is_zero()) {
                auto term = entry * det(mask & ~(1u << j));
                if (before % 2) {
                    sum -= term;
                } else {
                    sum += term;
                }
            }
            ++before;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return det(n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1));
}

std::vector<WeightedGraph> graphs_up_to_isomorphism(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("graphs_up_to_isomorphism needs 1 <= n <= 6");
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> slot;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            slot[{i, j}] = static_cast<int>(pairs.size());
            pairs.emplace_back(i, j);
        }
    }
    const int m = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> image;  // per permutation, edge slot -> slot
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<int> im;
        for (auto [a, b] : pairs) im.push_back(slot[{std::min(p[a], p[b]), std::max(p[a], p[b])}]);
        image.push_back(im);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<char> seen(std::size_t{1} << m, 0);
    std::vector<WeightedGraph> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (seen[mask]) continue;
        for (const auto& im : image) {
            unsigned q = 0;
            for (int e = 0; e < m; ++e) {
                if (mask & (1u << e)) q |= 1u << im[e];
            }
            seen[q] = 1;
        }
        std::vector<Vertex> vs;
        for (int v = 0; v < n; ++v) vs.push_back({v, 1});
        std::vector<Edge> es;
        for (int e = 0; e < m; ++e) {
            if (mask & (1u << e)) es.push_back(pairs[e]);
        }
        out.emplace_back(vs, es);
    }
    return out;
}

std::size_t brute_antichains(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    auto ancestor = [&](int a, int b) {  // a strictly above b
        for (int x = parent[b]; x >= 0; x = parent[x]) {
            if (x == a) return true;
        }
        return false;
    };
    std::size_t count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (!(mask & (1u << a))) continue;
            for (int b = 0; b < n && ok; ++b) {
                if ((mask & (1u << b)) && ancestor(a, b)) ok = false;
            }
        }
        count += ok ? 1 : 0;
    }
    return count;
}

BigInt multiset_count(const std::vector<long>& kinds, int n) {
    // ways[t] = multisets of total size t using sizes processed so far
    std::vector<BigInt> ways(static_cast<std::size_t>(n + 1), 0);
    ways[0] = 1;
    for (int s = 1; s <= n && s < static_cast<int>(kinds.size()); ++s) {
        const long k = kinds[s];
        if (k == 0) continue;
        std::vector<BigInt> next(ways.size(), 0);
        for (int t = 0; t <= n; ++t) {
            if (ways[t] == 0) continue;
            BigInt choose = 1;  // C(k + j - 1, j)
            for (int j = 0; t + j * s <= n; ++j) {
                if (j > 0) choose = choose * (k + j - 1) / j;
                next[t + j * s] += ways[t] * choose;
            }
        }
        ways = std::move(next);
    }
    return ways[n];
}

BigInt catalan(int m) {
    BigInt c = 1;
    for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace limbforge::oracle
