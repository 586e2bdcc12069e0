#include "limbforge/spectra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "limbforge/error.hpp"
#include "limbforge/trees.hpp"

namespace limbforge {

namespace {

int effective_weight(const Vertex& v, bool weighted) { return weighted ? v.weight : 1; }

// Characteristic polynomial of a forest, component by component:
// P_v = x^{w_v} prod P_c - sum_c Q_c prod_{c' != c} P_{c'}, Q_v = prod P_c.
IntPolynomial forest_poly(const WeightedGraph& g, bool weighted) {
    const auto n = g.order();
    const auto adj = g.adjacency();
    std::vector<IntPolynomial> p(n), q(n);
    std::vector<char> seen(n, 0);
    IntPolynomial total(1);
    for (std::size_t r = 0; r < n; ++r) {
        if (seen[r]) continue;
        std::vector<std::size_t> order{r};
        std::vector<std::size_t> parent(n, n);
        seen[r] = 1;
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
            const auto v = *it;
            std::vector<std::size_t> kids;
            for (auto y : adj[v]) {
                if (parent[y] == v) kids.push_back(y);
            }
            const auto m = kids.size();
            std::vector<IntPolynomial> suffix(m + 1, IntPolynomial(1));
            for (std::size_t i = m; i-- > 0;) suffix[i] = p[kids[i]] * suffix[i + 1];
            IntPolynomial prefix(1);
            IntPolynomial removed;
            for (std::size_t i = 0; i < m; ++i) {
                removed += q[kids[i]] * prefix * suffix[i + 1];
                prefix *= p[kids[i]];
            }
            q[v] = suffix[0];
            p[v] = IntPolynomial::monomial(effective_weight(g.vertices()[v], weighted)) * suffix[0] - removed;
        }
        total *= p[r];
    }
    return total;
}

}  // namespace

IntPolynomial char_poly_determinant(const WeightedGraph& g, bool weighted) {
    const auto n = g.order();
    if (n == 0) return IntPolynomial(1);
    std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = IntPolynomial::monomial(effective_weight(g.vertices()[i], weighted));
    }
    for (const auto& [a, b] : g.edges()) {
        const auto i = g.index_of(a), j = g.index_of(b);
        m[i][j] = IntPolynomial(-1);
        m[j][i] = IntPolynomial(-1);
    }
    // Bareiss: after step k every entry below/right of the pivot is a k+1 minor,
    // so the division by the previous pivot is exact in Z[x].
    bool negate = false;
    IntPolynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.exact_div(prev);
            }
            m[i][k] = IntPolynomial();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

IntPolynomial char_poly_tree(const WeightedGraph& tree, bool weighted) {
    if (!tree.is_tree()) throw Error(ErrorCode::NotATree, "graph is not a tree");
    return forest_poly(tree, weighted);
}

IntPolynomial char_poly(const WeightedGraph& g, bool weighted) {
    if (g.is_forest()) return forest_poly(g, weighted);
    return char_poly_determinant(g, weighted);
}

IdentityCheck check_union_identity(const WeightedGraph& g1, const WeightedGraph& g2, bool weighted) {
    IdentityCheck out;
    out.lhs = char_poly_determinant(disjoint_union(g1, g2).first, weighted);
    out.rhs = char_poly_determinant(g1, weighted) * char_poly_determinant(g2, weighted);
    out.holds = out.lhs == out.rhs;
    return out;
}

IdentityCheck check_cut_edge_identity(const WeightedGraph& g, const Edge& e, bool weighted) {
    const auto cut = g.without_edge(e.first, e.second);
    if (cut.components().size() == g.components().size()) {
        throw Error(ErrorCode::NotACutEdge, "edge " + std::to_string(e.first) + "-" +
                                                std::to_string(e.second) + " lies on a cycle");
    }
    const std::vector<VertexId> ends{e.first, e.second};
    IdentityCheck out;
    out.lhs = char_poly_determinant(g, weighted);
    out.rhs = char_poly_determinant(cut, weighted) - char_poly_determinant(g.without_vertices(ends), weighted);
    out.holds = out.lhs == out.rhs;
    return out;
}

IdentityCheck check_derivative_identity(const WeightedGraph& g, bool weighted) {
    IdentityCheck out;
    out.lhs = char_poly_determinant(g, weighted).derivative();
    for (const auto& v : g.vertices()) {
        const int w = effective_weight(v, weighted);
        out.rhs += IntPolynomial::monomial(w - 1, w) * char_poly_determinant(g.without_vertex(v.id), weighted);
    }
    out.holds = out.lhs == out.rhs;
    return out;
}

IntPolynomial one_sum_char_poly(const WeightedGraph& h, VertexId u, const WeightedGraph& k, VertexId v,
                                std::optional<int> merged_weight) {
    const int w1 = h.weight(u);
    const int w2 = k.weight(v);
    const int w = merged_weight.value_or(w1);
    if (w < 1) throw Error(ErrorCode::InvalidArgument, "merged weight must be positive");
    const auto ph = char_poly(h, true);
    const auto pk = char_poly(k, true);
    const auto ph_u = char_poly(h.without_vertex(u), true);
    const auto pk_v = char_poly(k.without_vertex(v), true);
    const auto corr = IntPolynomial::monomial(w) - IntPolynomial::monomial(w1) - IntPolynomial::monomial(w2);
    return ph_u * pk + ph * pk_v + corr * ph_u * pk_v;
}

std::vector<CospectralClass> cospectral_vertices(const WeightedGraph& g, bool weighted) {
    std::vector<CospectralClass> classes;
    for (const auto& v : g.vertices()) {
        auto p = char_poly(g.without_vertex(v.id), weighted);
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const CospectralClass& c) { return c.deleted_poly == p; });
        if (it == classes.end()) {
            classes.push_back({{v.id}, std::move(p)});
        } else {
            it->vertices.push_back(v.id);
        }
    }
    for (auto& c : classes) std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(classes.begin(), classes.end(),
              [](const CospectralClass& a, const CospectralClass& b) { return a.vertices[0] < b.vertices[0]; });
    return classes;
}

namespace {

// Index-based view used by the refinement search.
struct SearchGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> adj;
    std::vector<std::vector<char>> matrix;
    std::vector<long> colour;
};

SearchGraph search_graph(const WeightedGraph& g, bool respect_weights) {
    SearchGraph s;
    s.n = g.order();
    s.adj = g.adjacency();
    s.matrix.assign(s.n, std::vector<char>(s.n, 0));
    for (std::size_t i = 0; i < s.n; ++i) {
        for (auto j : s.adj[i]) s.matrix[i][j] = 1;
        s.colour.push_back(respect_weights ? g.vertices()[i].weight : 0);
    }
    return s;
}

using Signature = std::pair<long, std::vector<long>>;

// Joint colour refinement of two colourings; false if the colour
// histograms ever differ.
bool refine(const SearchGraph& a, const SearchGraph& b, std::vector<long>& ca, std::vector<long>& cb) {
    std::size_t classes = 0;
    for (;;) {
        auto sig = [](const SearchGraph& g, const std::vector<long>& c, std::size_t v) {
            Signature s{c[v], {}};
            for (auto y : g.adj[v]) s.second.push_back(c[y]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::vector<Signature> sa, sb;
        std::map<Signature, std::pair<long, long>> count;
        for (std::size_t v = 0; v < a.n; ++v) {
            sa.push_back(sig(a, ca, v));
            ++count[sa.back()].first;
        }
        for (std::size_t v = 0; v < b.n; ++v) {
            sb.push_back(sig(b, cb, v));
            ++count[sb.back()].second;
        }
        std::map<Signature, long> id;
        for (const auto& [s, c] : count) {
            if (c.first != c.second) return false;
            id.emplace(s, static_cast<long>(id.size()));
        }
        for (std::size_t v = 0; v < a.n; ++v) ca[v] = id.at(sa[v]);
        for (std::size_t v = 0; v < b.n; ++v) cb[v] = id.at(sb[v]);
        if (id.size() == classes) return true;
        classes = id.size();
    }
}

std::optional<std::vector<std::size_t>> search(const SearchGraph& a, const SearchGraph& b, std::vector<long> ca,
                                               std::vector<long> cb) {
    if (!refine(a, b, ca, cb)) return std::nullopt;
    std::map<long, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < a.n; ++v) cells[ca[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, members] : cells) {
        if (members.size() > 1 && (!target || members.size() < target->size())) target = &members;
    }
    if (!target) {
        std::vector<std::size_t> image(a.n);
        std::map<long, std::size_t> where;
        for (std::size_t v = 0; v < b.n; ++v) where[cb[v]] = v;
        for (std::size_t v = 0; v < a.n; ++v) image[v] = where.at(ca[v]);
        for (std::size_t x = 0; x < a.n; ++x) {
            for (std::size_t y = 0; y < a.n; ++y) {
                if (a.matrix[x][y] != b.matrix[image[x]][image[y]]) return std::nullopt;
            }
        }
        return image;
    }
    const long cell = ca[target->front()];
    const long fresh = static_cast<long>(a.n) + 1;
    const auto x = target->front();
    for (std::size_t y = 0; y < b.n; ++y) {
        if (cb[y] != cell) continue;
        auto na = ca;
        auto nb = cb;
        na[x] = fresh;
        nb[y] = fresh;
        if (auto found = search(a, b, std::move(na), std::move(nb))) return found;
    }
    return std::nullopt;
}

std::vector<CanonicalCode> forest_code(const WeightedGraph& g) {
    std::vector<CanonicalCode> out;
    for (const auto& comp : g.components()) out.push_back(canonicalize_free(g.induced(comp)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> group_orbits(const WeightedGraph& g, const std::vector<std::size_t>& rep) {
    std::map<std::size_t, std::vector<VertexId>> byrep;
    for (std::size_t i = 0; i < g.order(); ++i) byrep[rep[i]].push_back(g.vertices()[i].id);
    std::vector<std::vector<VertexId>> out;
    for (auto& [r, members] : byrep) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<VertexId>> similarity_orbits(const WeightedGraph& g, bool respect_weights) {
    const auto h = respect_weights ? g : g.unweighted();
    const auto n = h.order();
    std::vector<std::size_t> rep(n);
    if (h.is_forest()) {
        std::map<CanonicalCode, std::size_t> first;
        for (const auto& comp : h.components()) {
            const auto sub = h.induced(comp);
            const auto codes = canonical_rootings(sub);
            for (std::size_t i = 0; i < sub.order(); ++i) {
                const auto idx = h.index_of(sub.vertices()[i].id);
                rep[idx] = first.emplace(codes[i].code(), idx).first->second;
            }
        }
        return group_orbits(h, rep);
    }
    if (n > kMaxOrbitSearchOrder) {
        throw Error(ErrorCode::TooLarge, "automorphism search is limited to " +
                                             std::to_string(kMaxOrbitSearchOrder) + " vertices");
    }
    const auto s = search_graph(h, respect_weights);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return rep[x] == x ? x : rep[x] = find(rep[x]);
    };
    auto ca = s.colour;
    auto cb = s.colour;
    refine(s, s, ca, cb);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (ca[u] != ca[v] || find(u) == find(v)) continue;
            auto na = ca;
            auto nb = ca;
            na[u] = static_cast<long>(n) + 1;
            nb[v] = static_cast<long>(n) + 1;
            if (auto sigma = search(s, s, std::move(na), std::move(nb))) {
                for (std::size_t x = 0; x < n; ++x) {
                    const auto rx = find(x), ry = find((*sigma)[x]);
                    if (rx != ry) rep[std::max(rx, ry)] = std::min(rx, ry);
                }
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) rep[x] = find(x);
    return group_orbits(h, rep);
}

bool are_similar(const WeightedGraph& g, VertexId u, VertexId v, bool respect_weights) {
    g.index_of(u);
    g.index_of(v);
    for (const auto& orbit : similarity_orbits(g, respect_weights)) {
        const bool hu = std::binary_search(orbit.begin(), orbit.end(), u);
        const bool hv = std::binary_search(orbit.begin(), orbit.end(), v);
        if (hu || hv) return hu && hv;
    }
    return false;
}

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const WeightedGraph& a, const WeightedGraph& b,
                                                             bool respect_weights) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    if (!(a.is_forest() && b.is_forest()) &&
        (a.order() > kMaxOrbitSearchOrder || b.order() > kMaxOrbitSearchOrder)) {
        throw Error(ErrorCode::TooLarge, "isomorphism search is limited to " +
                                             std::to_string(kMaxOrbitSearchOrder) + " vertices");
    }
    const auto sa = search_graph(a, respect_weights);
    const auto sb = search_graph(b, respect_weights);
    auto image = search(sa, sb, sa.colour, sb.colour);
    if (!image) return std::nullopt;
    std::map<VertexId, VertexId> out;
    for (std::size_t i = 0; i < a.order(); ++i) out[a.vertices()[i].id] = b.vertices()[(*image)[i]].id;
    return out;
}

bool are_isomorphic(const WeightedGraph& a, const WeightedGraph& b, bool respect_weights) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.is_forest() && b.is_forest()) {
        return respect_weights ? forest_code(a) == forest_code(b)
                               : forest_code(a.unweighted()) == forest_code(b.unweighted());
    }
    return find_isomorphism(a, b, respect_weights).has_value();
}

WeightedGraph schwenk_tree() {
    std::vector<Vertex> vs;
    for (VertexId i = 1; i <= 9; ++i) vs.push_back({i, 1});
    std::vector<Edge> es;
    for (VertexId i = 1; i < 8; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(3, 9);
    return WeightedGraph(std::move(vs), std::move(es));
}

namespace {

// Swaps the limb rooted at `from_root` for the one rooted at `to_root` at the
// first vertex where that changes the isomorphism class; otherwise at the
// first vertex carrying it. Each swap is checked to keep the polynomial.
std::optional<WeightedGraph> swap_schwenk_limb(const WeightedGraph& host, bool weighted, VertexId from_root,
                                               VertexId to_root, std::optional<WeightedGraph>& fallback) {
    const auto limb = schwenk_tree();
    const auto from = canonicalize_rooted_at(limb, from_root).children();
    const auto to = canonicalize_rooted_at(limb, to_root).children();
    const auto adj = host.adjacency();
    std::optional<IntPolynomial> original;
    std::optional<CanonicalCode> original_code;
    for (std::size_t iv = 0; iv < host.order(); ++iv) {
        const auto& vx = host.vertices()[iv];
        if (vx.weight != 1 || adj[iv].size() < from.size()) continue;
        const auto subs = neighbor_subtrees(host, vx.id);
        std::vector<char> used(subs.size(), 0);
        std::vector<VertexId> drop;
        bool ok = true;
        for (const auto& want : from) {
            std::size_t k = 0;
            while (k < subs.size() && (used[k] || !(subs[k] == want))) ++k;
            if (k == subs.size()) {
                ok = false;
                break;
            }
            used[k] = 1;
            const auto part = component_beyond(host, vx.id, host.vertices()[adj[iv][k]].id);
            drop.insert(drop.end(), part.begin(), part.end());
        }
        if (!ok) continue;
        auto mate = host.without_vertices(drop);
        for (const auto& branch : to) mate = attach_subtree(mate, vx.id, branch).first;
        if (!original) original = char_poly(host, weighted);
        if (char_poly(mate, weighted) != *original) {
            throw Error(ErrorCode::Internal, "limb replacement changed the characteristic polynomial");
        }
        if (!original_code) original_code = canonicalize_free(host);
        if (canonicalize_free(mate) != *original_code) return mate;
        if (!fallback) fallback = std::move(mate);
    }
    return std::nullopt;
}

}  // namespace

std::optional<WeightedGraph> schwenk_mate(const WeightedGraph& tree, bool weighted, bool either_direction) {
    if (!tree.is_tree()) return std::nullopt;
    const auto host = weighted ? tree : tree.unweighted();
    if (host.order() < schwenk_tree().order()) return std::nullopt;
    std::optional<WeightedGraph> fallback;
    if (auto mate = swap_schwenk_limb(host, weighted, kSchwenkA, kSchwenkB, fallback)) return mate;
    if (either_direction) {
        if (auto mate = swap_schwenk_limb(host, weighted, kSchwenkB, kSchwenkA, fallback)) return mate;
    }
    return fallback;
}

}  // namespace limbforge
