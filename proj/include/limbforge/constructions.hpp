#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limbforge/graph.hpp"

namespace limbforge {

struct Extension {
    WeightedGraph graph;
    VertexId apex = 0;
};

/// Adds one weight-1 vertex (id `max_id() + 1`) adjacent exactly to `s`.
Extension one_vertex_extension(const WeightedGraph& g, const std::vector<VertexId>& s);

struct OneSum {
    WeightedGraph graph;
    /// Where each vertex of `k` ended up; `v` maps to `u`.
    std::map<VertexId, VertexId> right_ids;
    VertexId merged = 0;
};

/// Identifies `u` in `h` with `v` in `k`. Vertices of `h` keep their ids, the
/// rest of `k` is shifted past `h.max_id()`. The merged vertex gets
/// `merged_weight` (default: the weight of `u`).
OneSum one_sum(const WeightedGraph& h, VertexId u, const WeightedGraph& k, VertexId v,
               std::optional<int> merged_weight = std::nullopt);

/// The two one-vertex extensions of `g` over `s1` and `s2`, both with the
/// same apex id. Requires `a` pairwise cospectral, at most one vertex of `a`
/// per component, `s1`, `s2` inside `a` with equal sizes; throws
/// `HypothesisViolated` naming the failed clause. The polynomials of the
/// results are compared and a mismatch is an `Internal` error.
std::pair<WeightedGraph, WeightedGraph> extension_cospectral_pair(const WeightedGraph& g,
                                                                  const std::vector<VertexId>& a,
                                                                  const std::vector<VertexId>& s1,
                                                                  const std::vector<VertexId>& s2,
                                                                  bool weighted = false);

/// Base graph with c pairwise cospectral components and sets S_1..S_m,
/// each holding one vertex per component, all pairwise cospectral.
class CospectralSeed {
public:
    /// Validates everything above except m >= 2; throws `HypothesisViolated`.
    CospectralSeed(WeightedGraph base, std::vector<std::vector<VertexId>> sets, bool weighted = false);

    const WeightedGraph& base() const noexcept { return base_; }
    const std::vector<std::vector<VertexId>>& sets() const noexcept { return sets_; }
    bool weighted() const noexcept { return weighted_; }
    std::size_t components() const noexcept { return components_; }

private:
    WeightedGraph base_;
    std::vector<std::vector<VertexId>> sets_;
    bool weighted_ = false;
    std::size_t components_ = 0;
};

struct KCospectralResult {
    WeightedGraph graph;
    /// Neighbours of the set apexes other than the top apex, grouped by set.
    std::vector<std::vector<VertexId>> designated_by_set;
    std::vector<VertexId> designated;
    VertexId apex = 0;
    std::vector<VertexId> set_apexes;
    bool cospectral_in_graph = false;
    bool cospectral_without_apex = false;
    /// F - S_i pairwise non-isomorphic (empty if out of reach).
    std::optional<bool> removals_nonisomorphic;
    /// Similarity orbits met by the designated vertices (empty if the orbit
    /// search was out of reach).
    std::optional<std::size_t> designated_orbits;
    /// No designated vertex is similar to one from a different set.
    std::optional<bool> cross_set_nonsimilar;
};

/// Extends F over every S_i (apex v_i), then the union of the F_i over
/// {v_1..v_m} (apex v). Requires m >= 2 (`HypothesisViolated`).
KCospectralResult k_cospectral_construction(const CospectralSeed& seed);

/// Seed built from `c` copies of `l` and every multiset of size `c` drawn
/// from `cospectral` (vertices of `l`), the i-th smallest element going to
/// copy i. Experimental generalisation; the seed checks still apply.
CospectralSeed multiset_seed(const WeightedGraph& l, const std::vector<VertexId>& cospectral, int c,
                             bool weighted = false);

struct AttachResult {
    WeightedGraph graph;
    /// Ids of `a` inside the result.
    std::vector<VertexId> designated;
    VertexId merged = 0;
};

/// 1-sum of `g` at `v` with `l` at `r`, the merged vertex keeping the weight
/// of `v`. Requires `a` pairwise cospectral in `l` and in `l - r` and
/// r not in `a` (`HypothesisViolated`); cospectrality of `a` in the result
/// is verified directly.
AttachResult attach_preserving(const WeightedGraph& g, VertexId v, const WeightedGraph& l,
                               const std::vector<VertexId>& a, VertexId r, bool weighted = false);

/// True if every vertex in `vs` has the same phi(G - x).
bool pairwise_cospectral(const WeightedGraph& g, const std::vector<VertexId>& vs, bool weighted = false);

enum class NamedFixture { schwenk_tree, cyclic_cospectral, two_schwenk_seed, figure_construction };

const char* to_string(NamedFixture f) noexcept;
/// Throws `InvalidArgument` for unknown names.
NamedFixture parse_fixture(const std::string& name);

/// Named example graphs:
///  - schwenk_tree: path 1..8, 9 pendant at 3; a = 2, b = 5.
///  - cyclic_cospectral: path 1..6, 7 adjacent to 1 and 2, 8 adjacent to 3
///    and 4; a = 2, b = 4.
///  - two_schwenk_seed: schwenk_tree on 1..9 and on 11..19; a1 = 2, b1 = 5,
///    a2 = 12, b2 = 15.
///  - figure_construction: six copies on 1..9, 11..19, ..., 51..59 joined
///    through 61, 62, 63 and the top vertex 64.
WeightedGraph fixture(NamedFixture name);
/// Named vertices of a fixture ("a", "b", "a1", ...).
std::map<std::string, VertexId> fixture_labels(NamedFixture name);
/// two_schwenk_seed with the sets {a1,a2}, {b1,a2}, {b1,b2}.
CospectralSeed two_schwenk_seed();

}  // namespace limbforge
