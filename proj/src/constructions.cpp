#include "limbforge/constructions.hpp"

#include <algorithm>
#include <set>

#include "limbforge/error.hpp"
#include "limbforge/spectra.hpp"

namespace limbforge {

namespace {

[[noreturn]] void violated(const std::string& clause) { throw Error(ErrorCode::HypothesisViolated, clause); }

std::string id_list(const std::vector<VertexId>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s + "}";
}

}  // namespace

Extension one_vertex_extension(const WeightedGraph& g, const std::vector<VertexId>& s) {
    for (auto id : s) g.index_of(id);
    const VertexId apex = g.empty() ? 0 : g.max_id() + 1;
    auto vs = g.vertices();
    vs.push_back({apex, 1});
    auto es = g.edges();
    for (auto id : s) es.emplace_back(id, apex);
    return {WeightedGraph(std::move(vs), std::move(es), g.root()), apex};
}

OneSum one_sum(const WeightedGraph& h, VertexId u, const WeightedGraph& k, VertexId v,
               std::optional<int> merged_weight) {
    const int w = merged_weight.value_or(h.weight(u));
    k.index_of(v);
    if (w < 1) throw Error(ErrorCode::InvalidArgument, "merged weight must be positive");
    VertexId min_k = k.vertices().front().id;
    for (const auto& x : k.vertices()) min_k = std::min(min_k, x.id);
    const VertexId offset = h.max_id() + 1 - min_k;
    OneSum out;
    out.merged = u;
    auto vs = h.vertices();
    vs[h.index_of(u)].weight = w;
    for (const auto& x : k.vertices()) {
        if (x.id == v) {
            out.right_ids[x.id] = u;
        } else {
            out.right_ids[x.id] = x.id + offset;
            vs.push_back({x.id + offset, x.weight});
        }
    }
    auto es = h.edges();
    for (const auto& [a, b] : k.edges()) es.emplace_back(out.right_ids.at(a), out.right_ids.at(b));
    out.graph = WeightedGraph(std::move(vs), std::move(es), h.root());
    return out;
}

bool pairwise_cospectral(const WeightedGraph& g, const std::vector<VertexId>& vs, bool weighted) {
    if (vs.size() < 2) {
        for (auto x : vs) g.index_of(x);
        return true;
    }
    const auto first = char_poly(g.without_vertex(vs.front()), weighted);
    for (std::size_t i = 1; i < vs.size(); ++i) {
        if (char_poly(g.without_vertex(vs[i]), weighted) != first) return false;
    }
    return true;
}

std::pair<WeightedGraph, WeightedGraph> extension_cospectral_pair(const WeightedGraph& g,
                                                                  const std::vector<VertexId>& a,
                                                                  const std::vector<VertexId>& s1,
                                                                  const std::vector<VertexId>& s2,
                                                                  bool weighted) {
    for (auto x : a) g.index_of(x);
    if (!pairwise_cospectral(g, a, weighted)) violated("the vertices of A are not pairwise cospectral");
    std::map<VertexId, std::size_t> comp_of;
    const auto comps = g.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (auto x : comps[c]) comp_of[x] = c;
    }
    std::set<std::size_t> hit;
    for (auto x : a) {
        if (!hit.insert(comp_of.at(x)).second) violated("a component holds more than one vertex of A");
    }
    const std::set<VertexId> aset(a.begin(), a.end());
    for (const auto* s : {&s1, &s2}) {
        for (auto x : *s) {
            if (!aset.contains(x)) violated("vertex " + std::to_string(x) + " of S1/S2 is not in A");
        }
    }
    if (s1.size() != s2.size()) violated("S1 and S2 differ in size");
    auto e1 = one_vertex_extension(g, s1).graph;
    auto e2 = one_vertex_extension(g, s2).graph;
    if (char_poly(e1, weighted) != char_poly(e2, weighted)) {
        throw Error(ErrorCode::Internal, "extensions over " + id_list(s1) + " and " + id_list(s2) +
                                             " are not cospectral");
    }
    return {std::move(e1), std::move(e2)};
}

CospectralSeed::CospectralSeed(WeightedGraph base, std::vector<std::vector<VertexId>> sets, bool weighted)
    : base_(std::move(base)), sets_(std::move(sets)), weighted_(weighted) {
    if (base_.empty()) violated("the base graph is empty");
    const auto comps = base_.components();
    components_ = comps.size();
    const auto first = char_poly(base_.induced(comps.front()), weighted_);
    for (std::size_t c = 1; c < comps.size(); ++c) {
        if (char_poly(base_.induced(comps[c]), weighted_) != first) {
            violated("the components of F are not pairwise cospectral");
        }
    }
    std::map<VertexId, std::size_t> comp_of;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (auto x : comps[c]) comp_of[x] = c;
    }
    std::set<std::vector<VertexId>> seen;
    std::set<VertexId> all;
    for (auto& s : sets_) {
        for (auto x : s) base_.index_of(x);
        if (s.size() != components_) {
            violated("set " + id_list(s) + " does not have one vertex per component");
        }
        std::set<std::size_t> hit;
        for (auto x : s) hit.insert(comp_of.at(x));
        if (hit.size() != components_) violated("set " + id_list(s) + " misses a component");
        auto key = s;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) violated("set " + id_list(s) + " is repeated");
        all.insert(s.begin(), s.end());
    }
    if (!pairwise_cospectral(base_, std::vector<VertexId>(all.begin(), all.end()), weighted_)) {
        violated("the vertices of the sets are not pairwise cospectral in F");
    }
}

KCospectralResult k_cospectral_construction(const CospectralSeed& seed) {
    const auto& sets = seed.sets();
    if (sets.size() < 2) violated("the construction needs at least two sets");
    const auto& f = seed.base();
    KCospectralResult out;
    WeightedGraph all;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto ext = one_vertex_extension(f, sets[i]);
        VertexId offset = 0;
        if (i == 0) {
            all = ext.graph;
        } else {
            auto joined = disjoint_union(all, ext.graph);
            all = std::move(joined.first);
            offset = joined.second;
        }
        out.set_apexes.push_back(ext.apex + offset);
        std::vector<VertexId> d;
        for (auto x : sets[i]) d.push_back(x + offset);
        out.designated_by_set.push_back(d);
        out.designated.insert(out.designated.end(), d.begin(), d.end());
    }
    auto top = one_vertex_extension(all, out.set_apexes);
    out.graph = std::move(top.graph);
    out.apex = top.apex;
    out.cospectral_in_graph = pairwise_cospectral(out.graph, out.designated, seed.weighted());
    out.cospectral_without_apex =
        pairwise_cospectral(out.graph.without_vertex(out.apex), out.designated, seed.weighted());

    try {
        bool distinct = true;
        for (std::size_t i = 0; i < sets.size() && distinct; ++i) {
            for (std::size_t j = i + 1; j < sets.size() && distinct; ++j) {
                distinct = !are_isomorphic(f.without_vertices(sets[i]), f.without_vertices(sets[j]));
            }
        }
        out.removals_nonisomorphic = distinct;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
    }
    try {
        const auto orbits = similarity_orbits(out.graph);
        std::map<VertexId, std::size_t> orbit_of;
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            for (auto x : orbits[o]) orbit_of[x] = o;
        }
        std::set<std::size_t> met;
        for (auto x : out.designated) met.insert(orbit_of.at(x));
        out.designated_orbits = met.size();
        bool apart = true;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                for (auto x : out.designated_by_set[i]) {
                    for (auto y : out.designated_by_set[j]) apart = apart && orbit_of.at(x) != orbit_of.at(y);
                }
            }
        }
        out.cross_set_nonsimilar = apart;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
    }
    return out;
}

CospectralSeed multiset_seed(const WeightedGraph& l, const std::vector<VertexId>& cospectral, int c,
                             bool weighted) {
    if (c < 1) throw Error(ErrorCode::InvalidArgument, "need at least one copy");
    if (cospectral.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one cospectral vertex");
    for (auto x : cospectral) l.index_of(x);
    WeightedGraph base = l;
    std::vector<VertexId> offsets{0};
    for (int i = 1; i < c; ++i) {
        auto joined = disjoint_union(base, l);
        base = std::move(joined.first);
        offsets.push_back(joined.second);
    }
    std::vector<std::vector<VertexId>> sets;
    std::vector<std::size_t> pick(static_cast<std::size_t>(c), 0);
    for (;;) {
        std::vector<VertexId> s;
        for (int i = 0; i < c; ++i) s.push_back(cospectral[pick[i]] + offsets[i]);
        sets.push_back(std::move(s));
        int i = c - 1;
        while (i >= 0 && pick[i] + 1 == cospectral.size()) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < c; ++j) pick[j] = pick[i];
    }
    return CospectralSeed(std::move(base), std::move(sets), weighted);
}

AttachResult attach_preserving(const WeightedGraph& g, VertexId v, const WeightedGraph& l,
                               const std::vector<VertexId>& a, VertexId r, bool weighted) {
    l.index_of(r);
    if (std::find(a.begin(), a.end(), r) != a.end()) violated("r is one of the cospectral vertices");
    if (!pairwise_cospectral(l, a, weighted)) violated("the vertices are not pairwise cospectral in L");
    if (!pairwise_cospectral(l.without_vertex(r), a, weighted)) {
        violated("the vertices are not pairwise cospectral in L - r");
    }
    auto sum = one_sum(g, v, l, r, g.weight(v));
    AttachResult out;
    for (auto x : a) out.designated.push_back(sum.right_ids.at(x));
    out.graph = std::move(sum.graph);
    out.merged = sum.merged;
    if (!pairwise_cospectral(out.graph, out.designated, weighted)) {
        throw Error(ErrorCode::Internal, "attached vertices stopped being cospectral");
    }
    return out;
}

const char* to_string(NamedFixture f) noexcept {
    switch (f) {
        case NamedFixture::schwenk_tree: return "schwenk_tree";
        case NamedFixture::cyclic_cospectral: return "cyclic_cospectral";
        case NamedFixture::two_schwenk_seed: return "two_schwenk_seed";
        case NamedFixture::figure_construction: return "figure_construction";
    }
    return "unknown";
}

NamedFixture parse_fixture(const std::string& name) {
    for (auto f : {NamedFixture::schwenk_tree, NamedFixture::cyclic_cospectral, NamedFixture::two_schwenk_seed,
                   NamedFixture::figure_construction}) {
        if (name == to_string(f)) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

WeightedGraph fixture(NamedFixture name) {
    switch (name) {
        case NamedFixture::schwenk_tree: return schwenk_tree();
        case NamedFixture::cyclic_cospectral: {
            std::vector<Vertex> vs;
            for (VertexId i = 1; i <= 8; ++i) vs.push_back({i, 1});
            return WeightedGraph(std::move(vs),
                                 {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 7}, {2, 7}, {3, 8}, {4, 8}});
        }
        case NamedFixture::two_schwenk_seed: {
            const auto t = schwenk_tree();
            auto vs = t.vertices();
            auto es = t.edges();
            for (const auto& v : t.vertices()) vs.push_back({v.id + 10, v.weight});
            for (const auto& [a, b] : t.edges()) es.emplace_back(a + 10, b + 10);
            return WeightedGraph(std::move(vs), std::move(es));
        }
        case NamedFixture::figure_construction: {
            std::vector<Vertex> vs;
            std::vector<Edge> es;
            for (VertexId k = 0; k < 6; ++k) {
                const VertexId base = 10 * k;
                for (VertexId i = 1; i <= 9; ++i) vs.push_back({base + i, 1});
                for (VertexId i = 1; i < 8; ++i) es.emplace_back(base + i, base + i + 1);
                es.emplace_back(base + 3, base + 9);
            }
            for (VertexId i = 61; i <= 64; ++i) vs.push_back({i, 1});
            const std::vector<Edge> joins{{2, 61},  {12, 61}, {22, 62}, {35, 62}, {45, 63},
                                          {55, 63}, {61, 64}, {62, 64}, {63, 64}};
            es.insert(es.end(), joins.begin(), joins.end());
            return WeightedGraph(std::move(vs), std::move(es));
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown fixture");
}

std::map<std::string, VertexId> fixture_labels(NamedFixture name) {
    switch (name) {
        case NamedFixture::schwenk_tree: return {{"a", kSchwenkA}, {"b", kSchwenkB}};
        case NamedFixture::cyclic_cospectral: return {{"a", 2}, {"b", 4}};
        case NamedFixture::two_schwenk_seed: return {{"a1", 2}, {"b1", 5}, {"a2", 12}, {"b2", 15}};
        case NamedFixture::figure_construction:
            return {{"u1", 2},  {"u2", 12}, {"u3", 22}, {"u4", 35}, {"u5", 45},
                    {"u6", 55}, {"v1", 61}, {"v2", 62}, {"v3", 63}, {"v", 64}};
    }
    return {};
}

CospectralSeed two_schwenk_seed() {
    return CospectralSeed(fixture(NamedFixture::two_schwenk_seed), {{2, 12}, {5, 12}, {5, 15}});
}

}  // namespace limbforge
