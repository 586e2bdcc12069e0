#include "limbforge/census.hpp"

#include <set>

#include "limbforge/error.hpp"
#include "limbforge/parallel.hpp"
#include "limbforge/spectra.hpp"

namespace limbforge {

const char* to_string(CensusProperty p) noexcept {
    switch (p) {
        case CensusProperty::has_limb: return "has_limb";
        case CensusProperty::has_cospectral_mate: return "has_cospectral_mate";
        case CensusProperty::has_k_cospectral_vertices: return "has_k_cospectral_vertices";
    }
    return "unknown";
}

CensusProperty parse_census_property(const std::string& name) {
    for (auto p : {CensusProperty::has_limb, CensusProperty::has_cospectral_mate,
                   CensusProperty::has_k_cospectral_vertices}) {
        if (name == to_string(p)) return p;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown census property '" + name + "'");
}

TreeFamily parse_tree_family(const std::string& name) {
    for (auto f : {TreeFamily::rooted, TreeFamily::free, TreeFamily::weighted_rooted, TreeFamily::weighted_free}) {
        if (name == to_string(f)) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown tree family '" + name + "'");
}

namespace {

bool is_free(TreeFamily kind) { return kind == TreeFamily::free || kind == TreeFamily::weighted_free; }
bool is_weighted(TreeFamily kind) {
    return kind == TreeFamily::weighted_rooted || kind == TreeFamily::weighted_free;
}

CanonicalTree schwenk_limb() { return canonicalize_rooted_at(schwenk_tree(), kSchwenkA); }

bool rooted_mate_differs(const CanonicalTree& tree, bool weighted) {
    const auto host = to_graph(tree);
    const auto limb = schwenk_tree();
    const auto at_a = canonicalize_rooted_at(limb, kSchwenkA);
    const auto at_b = canonicalize_rooted_at(limb, kSchwenkB);
    std::optional<IntPolynomial> poly;
    for (const auto& [from, to] : {std::pair{at_a, at_b}, std::pair{at_b, at_a}}) {
        for (const auto& occ : limb_occurrences(host, LimbSpec(from, LimbMode::limb))) {
            const auto mate = replace_limb(host, occ.vertex, from, to);
            if (!poly) poly = char_poly(host, weighted);
            if (char_poly(mate, weighted) != *poly) {
                throw Error(ErrorCode::Internal, "limb replacement changed the characteristic polynomial");
            }
            if (canonicalize_rooted(mate) != tree) return true;
        }
    }
    return false;
}

}  // namespace

bool census_hit(const CanonicalTree& tree, CensusProperty property, TreeFamily kind, const CensusParams& params) {
    const bool weighted = is_weighted(kind);
    switch (property) {
        case CensusProperty::has_limb: {
            const LimbSpec spec(params.limb.value_or(schwenk_limb()), LimbMode::limb);
            return is_free(kind) ? contains_limb_free(to_graph(tree), spec) : contains_limb(tree, spec);
        }
        case CensusProperty::has_cospectral_mate: {
            if (!is_free(kind)) return rooted_mate_differs(tree, weighted);
            const auto host = to_graph(tree).with_root(std::nullopt);
            const auto mate = schwenk_mate(host, weighted, true);
            return mate && canonicalize_free(*mate) != canonicalize_free(host);
        }
        case CensusProperty::has_k_cospectral_vertices: {
            if (params.k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
            const auto g = to_graph(tree).with_root(std::nullopt);
            const auto orbits = similarity_orbits(g, weighted);
            std::map<VertexId, std::size_t> orbit_of;
            for (std::size_t o = 0; o < orbits.size(); ++o) {
                for (auto x : orbits[o]) orbit_of[x] = o;
            }
            for (const auto& cls : cospectral_vertices(g, weighted)) {
                std::set<std::size_t> met;
                for (auto x : cls.vertices) met.insert(orbit_of.at(x));
                if (static_cast<int>(met.size()) >= params.k) return true;
            }
            return false;
        }
    }
    return false;
}

std::vector<CensusRow> census(CensusProperty property, TreeFamily kind, int n_min, int n_max,
                              const CensusParams& params, const std::function<void(const CensusRow&)>& on_row) {
    const int limit = is_weighted(kind) ? kCensusMaxWeighted : kCensusMaxUnweighted;
    if (n_min < 1 || n_max < n_min) throw Error(ErrorCode::InvalidArgument, "need 1 <= n_min <= n_max");
    if (n_max > limit) {
        throw Error(ErrorCode::TooLarge, std::string(to_string(kind)) + " census is limited to n <= " +
                                             std::to_string(limit));
    }
    std::vector<CensusRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<CanonicalTree> trees;
        switch (kind) {
            case TreeFamily::rooted: trees = enumerate_rooted(n); break;
            case TreeFamily::free: trees = enumerate_free(n); break;
            case TreeFamily::weighted_rooted: trees = enumerate_weighted_rooted(n); break;
            case TreeFamily::weighted_free: trees = enumerate_weighted_free(n); break;
        }
        std::vector<char> hit(trees.size(), 0);
        parallel_for(trees.size(), [&](std::size_t i) { hit[i] = census_hit(trees[i], property, kind, params); });
        CensusRow row;
        row.n = n;
        row.total = trees.size();
        for (auto h : hit) row.hits += h ? 1 : 0;
        row.property = property;
        row.k = property == CensusProperty::has_k_cospectral_vertices ? params.k : 0;
        row.fraction = BigRational(row.hits, row.total);
        if (on_row) on_row(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace limbforge
