#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "limbforge/bigint.hpp"
#include "limbforge/graph.hpp"
#include "limbforge/trees.hpp"

namespace limbforge {

enum class LimbMode { limb, maximal };

const char* to_string(LimbMode mode) noexcept;

/// A forbidden pattern. In `limb` mode the pattern's root must match the host
/// vertex weight and the pattern's child subtrees must appear (as a
/// sub-multiset) among the branches at the host vertex; a limb needs at
/// least 2 vertices. In `maximal` mode the whole descendant subtree of the
/// host vertex must equal the pattern.
class LimbSpec {
public:
    LimbSpec(CanonicalTree pattern, LimbMode mode);

    const CanonicalTree& pattern() const noexcept { return pattern_; }
    LimbMode mode() const noexcept { return mode_; }

private:
    CanonicalTree pattern_;
    LimbMode mode_;
};

/// Branch multiplicities consumed by one occurrence of a limb at `vertex`.
struct LimbOccurrence {
    VertexId vertex = 0;
    std::vector<std::pair<CanonicalCode, int>> matched_branches;
};

enum class TreeFamily { rooted, free, weighted_rooted, weighted_free };

const char* to_string(TreeFamily family) noexcept;

/// Branches at `v` in a rooted tree: one per child c, the subtree of c with
/// `v` (and its weight) prepended as a degree-1 root.
std::vector<CanonicalTree> branches_at(const WeightedGraph& rooted, VertexId v);
/// Same for a free tree: one branch per component of T - v.
std::vector<CanonicalTree> branches_at_free(const WeightedGraph& tree, VertexId v);

bool has_limb(const WeightedGraph& rooted, const LimbSpec& spec, VertexId v);
/// Free-host variant: every vertex is a root candidate and its branches are
/// the components of T - v. Only `limb` mode is meaningful here.
bool has_limb_free(const WeightedGraph& tree, const LimbSpec& spec, VertexId v);

/// Whether any vertex of the canonical rooted tree carries the pattern.
bool contains_limb(const CanonicalTree& tree, const LimbSpec& spec);
bool contains_limb_free(const WeightedGraph& tree, const LimbSpec& spec);

/// All vertices of a rooted tree carrying the pattern. In `maximal` mode the
/// occurrences are checked to be vertex-disjoint (throws `Internal` if not).
std::vector<LimbOccurrence> limb_occurrences(const WeightedGraph& rooted, const LimbSpec& spec);

/// Number of trees of the family with `n` vertices (total weight `n` for
/// weighted families) that carry the pattern at no vertex.
BigInt count_avoiding(int n, const LimbSpec& spec, TreeFamily family = TreeFamily::rooted);

/// Removes one copy of `old_limb`'s child subtrees from the children of `v`
/// and grafts `new_limb`'s child subtrees there; `v` takes the new root
/// weight. Grafted vertices get fresh ids. Throws `NoOccurrence`.
WeightedGraph replace_limb(const WeightedGraph& rooted, VertexId v, const CanonicalTree& old_limb,
                           const CanonicalTree& new_limb);

/// Which occurrence to rewrite next while normalising.
enum class OccurrenceOrder { first, last, random };

/// Repeatedly replaces occurrences of `from` (as a limb) by `to` until none
/// remain. Throws `ReplacementDiverged` after `max_steps` rewrites.
WeightedGraph normalize_by_replacement(const WeightedGraph& rooted, const CanonicalTree& from,
                                       const CanonicalTree& to,
                                       OccurrenceOrder order = OccurrenceOrder::first,
                                       std::uint64_t seed = 0, int max_steps = 100000);

}  // namespace limbforge
