#include "limbforge/limbs.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "limbforge/error.hpp"

namespace limbforge {

const char* to_string(LimbMode mode) noexcept {
    return mode == LimbMode::limb ? "limb" : "maximal";
}

const char* to_string(TreeFamily family) noexcept {
    switch (family) {
        case TreeFamily::rooted: return "rooted";
        case TreeFamily::free: return "free";
        case TreeFamily::weighted_rooted: return "weighted-rooted";
        case TreeFamily::weighted_free: return "weighted-free";
    }
    return "unknown";
}

LimbSpec::LimbSpec(CanonicalTree pattern, LimbMode mode) : pattern_(std::move(pattern)), mode_(mode) {
    if (mode_ == LimbMode::limb && pattern_.order() < 2) {
        throw Error(ErrorCode::BadLimbSize, "a limb pattern needs at least 2 vertices");
    }
}

namespace {

// Children and canonical descendant subtree of every vertex of a rooted tree.
struct RootedLayout {
    std::vector<std::vector<std::size_t>> children;
    std::vector<CanonicalTree> subtree;
    std::vector<std::size_t> parent;
};

RootedLayout layout(const WeightedGraph& rooted) {
    if (!rooted.root()) throw Error(ErrorCode::MissingRoot, "rooted tree has no root");
    if (!rooted.is_tree()) throw Error(ErrorCode::NotATree, "graph is not a tree");
    const auto n = rooted.order();
    const auto adj = rooted.adjacency();
    const auto root = rooted.index_of(*rooted.root());
    RootedLayout out;
    out.children.resize(n);
    out.subtree.resize(n);
    out.parent.assign(n, n);
    std::vector<std::size_t> order{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (auto y : adj[order[head]]) {
            if (!seen[y]) {
                seen[y] = 1;
                out.parent[y] = order[head];
                out.children[order[head]].push_back(y);
                order.push_back(y);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<CanonicalTree> kids;
        for (auto c : out.children[*it]) kids.push_back(out.subtree[c]);
        out.subtree[*it] = CanonicalTree(rooted.vertices()[*it].weight, std::move(kids));
    }
    return out;
}

// Multiset containment of `needle` in `hay`, both sorted by code.
bool contains_multiset(const std::vector<CanonicalTree>& hay, const std::vector<CanonicalTree>& needle) {
    return std::includes(hay.begin(), hay.end(), needle.begin(), needle.end());
}

bool matches_at(int weight, const std::vector<CanonicalTree>& sorted_branch_roots, const LimbSpec& spec) {
    return weight == spec.pattern().weight() &&
           contains_multiset(sorted_branch_roots, spec.pattern().children());
}

std::vector<CanonicalTree> sorted_child_subtrees(const RootedLayout& lay, std::size_t v) {
    std::vector<CanonicalTree> kids;
    for (auto c : lay.children[v]) kids.push_back(lay.subtree[c]);
    std::sort(kids.begin(), kids.end());
    return kids;
}

void require_limb_mode(const LimbSpec& spec) {
    if (spec.mode() != LimbMode::limb) {
        throw Error(ErrorCode::InvalidArgument, "maximal limbs are defined for rooted hosts only");
    }
}

}  // namespace

std::vector<CanonicalTree> branches_at(const WeightedGraph& rooted, VertexId v) {
    const auto iv = rooted.index_of(v);
    const auto lay = layout(rooted);
    std::vector<CanonicalTree> out;
    for (auto c : lay.children[iv]) {
        out.emplace_back(rooted.vertices()[iv].weight, std::vector<CanonicalTree>{lay.subtree[c]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CanonicalTree> branches_at_free(const WeightedGraph& tree, VertexId v) {
    const int w = tree.weight(v);
    std::vector<CanonicalTree> out;
    for (auto& sub : neighbor_subtrees(tree, v)) {
        out.emplace_back(w, std::vector<CanonicalTree>{std::move(sub)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_limb(const WeightedGraph& rooted, const LimbSpec& spec, VertexId v) {
    const auto iv = rooted.index_of(v);
    const auto lay = layout(rooted);
    if (spec.mode() == LimbMode::maximal) return lay.subtree[iv] == spec.pattern();
    return matches_at(rooted.vertices()[iv].weight, sorted_child_subtrees(lay, iv), spec);
}

bool has_limb_free(const WeightedGraph& tree, const LimbSpec& spec, VertexId v) {
    require_limb_mode(spec);
    auto subs = neighbor_subtrees(tree, v);
    std::sort(subs.begin(), subs.end());
    return matches_at(tree.weight(v), subs, spec);
}

bool contains_limb(const CanonicalTree& tree, const LimbSpec& spec) {
    if (tree.order() < spec.pattern().order()) return false;
    if (spec.mode() == LimbMode::maximal) {
        if (tree == spec.pattern()) return true;
    } else if (matches_at(tree.weight(), tree.children(), spec)) {
        return true;
    }
    return std::any_of(tree.children().begin(), tree.children().end(),
                       [&](const CanonicalTree& c) { return contains_limb(c, spec); });
}

bool contains_limb_free(const WeightedGraph& tree, const LimbSpec& spec) {
    require_limb_mode(spec);
    if (tree.order() < spec.pattern().order()) return false;
    for (const auto& v : tree.vertices()) {
        if (v.weight != spec.pattern().weight()) continue;
        if (tree.degree(v.id) < spec.pattern().children().size()) continue;
        if (has_limb_free(tree, spec, v.id)) return true;
    }
    return false;
}

std::vector<LimbOccurrence> limb_occurrences(const WeightedGraph& rooted, const LimbSpec& spec) {
    const auto lay = layout(rooted);
    std::vector<LimbOccurrence> out;
    std::vector<std::size_t> hosts;
    for (std::size_t i = 0; i < rooted.order(); ++i) {
        const bool hit = spec.mode() == LimbMode::maximal
                             ? lay.subtree[i] == spec.pattern()
                             : matches_at(rooted.vertices()[i].weight, sorted_child_subtrees(lay, i), spec);
        if (!hit) continue;
        hosts.push_back(i);
        LimbOccurrence occ;
        occ.vertex = rooted.vertices()[i].id;
        std::map<CanonicalCode, int> used;
        for (const auto& child : spec.pattern().children()) {
            const CanonicalTree branch(rooted.vertices()[i].weight, {child});
            ++used[branch.code()];
        }
        occ.matched_branches.assign(used.begin(), used.end());
        out.push_back(std::move(occ));
    }
    if (spec.mode() == LimbMode::maximal) {
        std::vector<int> owner(rooted.order(), -1);
        for (std::size_t k = 0; k < hosts.size(); ++k) {
            std::vector<std::size_t> stack{hosts[k]};
            while (!stack.empty()) {
                const auto x = stack.back();
                stack.pop_back();
                if (owner[x] >= 0) {
                    throw Error(ErrorCode::Internal, "maximal-limb occurrences share a vertex");
                }
                owner[x] = static_cast<int>(k);
                for (auto c : lay.children[x]) stack.push_back(c);
            }
        }
    }
    return out;
}

BigInt count_avoiding(int n, const LimbSpec& spec, TreeFamily family) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    BigInt count = 0;
    switch (family) {
        case TreeFamily::rooted:
            for (const auto& t : enumerate_rooted(n)) count += contains_limb(t, spec) ? 0 : 1;
            break;
        case TreeFamily::weighted_rooted:
            for (const auto& t : enumerate_weighted_rooted(n)) count += contains_limb(t, spec) ? 0 : 1;
            break;
        case TreeFamily::free:
            require_limb_mode(spec);
            for (const auto& t : enumerate_free(n)) count += contains_limb_free(to_graph(t), spec) ? 0 : 1;
            break;
        case TreeFamily::weighted_free:
            require_limb_mode(spec);
            for (const auto& t : enumerate_weighted_free(n)) {
                count += contains_limb_free(to_graph(t), spec) ? 0 : 1;
            }
            break;
    }
    return count;
}

WeightedGraph replace_limb(const WeightedGraph& rooted, VertexId v, const CanonicalTree& old_limb,
                           const CanonicalTree& new_limb) {
    const LimbSpec spec(old_limb, LimbMode::limb);
    const auto iv = rooted.index_of(v);
    const auto lay = layout(rooted);
    if (!matches_at(rooted.vertices()[iv].weight, sorted_child_subtrees(lay, iv), spec)) {
        throw Error(ErrorCode::NoOccurrence, "vertex " + std::to_string(v) + " does not carry the limb");
    }
    // Pick, for each pattern child, the first unused child of v with that shape.
    std::vector<char> used(lay.children[iv].size(), 0);
    std::vector<VertexId> drop;
    for (const auto& want : old_limb.children()) {
        for (std::size_t k = 0; k < lay.children[iv].size(); ++k) {
            const auto c = lay.children[iv][k];
            if (!used[k] && lay.subtree[c] == want) {
                used[k] = 1;
                const auto part = component_beyond(rooted, v, rooted.vertices()[c].id);
                drop.insert(drop.end(), part.begin(), part.end());
                break;
            }
        }
    }
    auto out = rooted.without_vertices(drop).with_weight(v, new_limb.weight());
    for (const auto& child : new_limb.children()) out = attach_subtree(out, v, child).first;
    return out;
}

WeightedGraph normalize_by_replacement(const WeightedGraph& rooted, const CanonicalTree& from,
                                       const CanonicalTree& to, OccurrenceOrder order,
                                       std::uint64_t seed, int max_steps) {
    const LimbSpec spec(from, LimbMode::limb);
    std::mt19937_64 rng(seed);
    WeightedGraph current = rooted;
    for (int step = 0; step <= max_steps; ++step) {
        const auto occ = limb_occurrences(current, spec);
        if (occ.empty()) return current;
        std::size_t pick = 0;
        switch (order) {
            case OccurrenceOrder::first: pick = 0; break;
            case OccurrenceOrder::last: pick = occ.size() - 1; break;
            case OccurrenceOrder::random:
                pick = std::uniform_int_distribution<std::size_t>(0, occ.size() - 1)(rng);
                break;
        }
        current = replace_limb(current, occ[pick].vertex, from, to);
    }
    throw Error(ErrorCode::ReplacementDiverged,
                "limb replacement did not terminate within " + std::to_string(max_steps) + " steps");
}

}  // namespace limbforge
