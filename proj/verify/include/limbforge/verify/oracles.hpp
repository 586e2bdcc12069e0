#pragma once

// Independent reference implementations. Nothing here calls the library's
// canonical forms, enumerators or determinant engine; graphs are plain
// edge lists on vertices 0..n-1.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "limbforge/bigint.hpp"
#include "limbforge/graph.hpp"
#include "limbforge/polynomial.hpp"

namespace limbforge::oracle {

struct PlainTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> weight;  // empty = all 1
    int root = -1;            // -1 = free

    int weight_of(int v) const { return weight.empty() ? 1 : weight[static_cast<std::size_t>(v)]; }
};

enum class PatternMode { limb, maximal };

WeightedGraph to_weighted_graph(const PlainTree& t);

/// Labeled tree from a Pruefer sequence over 0..n-1 (n = seq.size() + 2).
PlainTree decode_pruefer(const std::vector<int>& seq);

/// Calls `emit` on one labeled tree per weakly increasing Pruefer sequence
/// of length n - 2; every unlabeled tree shape appears at least once.
template <class F>
void for_each_sorted_pruefer_tree(int n, F&& emit);
/// Every labeled tree on n vertices (n^{n-2} of them).
template <class F>
void for_each_pruefer_tree(int n, F&& emit);

/// AHU string of the tree rooted at `root`, weights included.
std::string ahu_rooted(const PlainTree& t, int root);
/// Canonical string of the free tree: rooted at its centre (leaf stripping),
/// minimum over the two rootings for a central edge.
std::string ahu_free(const PlainTree& t);

/// Distinct rooted / free shapes on n vertices, keyed by AHU string. With
/// `all_labelings` every Pruefer sequence is decoded, otherwise only the
/// weakly increasing ones.
std::vector<PlainTree> rooted_shapes(int n, bool all_labelings = false);
std::vector<PlainTree> free_shapes(int n, bool all_labelings = false);

/// Shape x composition: every shape on m <= total vertices with every
/// assignment of positive weights summing to `total`, deduplicated.
std::vector<PlainTree> weighted_rooted_trees(int total);
std::vector<PlainTree> weighted_free_trees(int total);

/// Limb test straight from the definitions. Rooted hosts look at the
/// children of v, free hosts at the components of T - v.
bool carries_pattern(const PlainTree& host, int v, const PlainTree& pattern, PatternMode mode);
bool avoids_pattern(const PlainTree& host, const PlainTree& pattern, PatternMode mode);
/// Hosts from the oracle lists above: rooted / free shapes on n vertices or
/// weighted trees of total weight n.
std::size_t count_avoiding(int n, const PlainTree& pattern, PatternMode mode, bool weighted, bool free_host);

/// Random labeled tree on n vertices from a random Pruefer sequence.
template <class Rng>
PlainTree random_tree(int n, Rng& rng);

/// Permutation search; fine up to about 9 vertices.
bool brute_isomorphic(const WeightedGraph& a, const WeightedGraph& b);
/// Orbits of all permutations preserving edges and weights.
std::vector<std::vector<VertexId>> brute_orbits(const WeightedGraph& g);

/// Laplace expansion of det(I*(x) - A) along the first row.
IntPolynomial cofactor_char_poly(const WeightedGraph& g, bool weighted);

/// One graph per isomorphism class on n vertices (n <= 6), vertices 0..n-1.
std::vector<WeightedGraph> graphs_up_to_isomorphism(int n);

/// Subsets of the vertices of a rooted tree (given by parent array, root
/// has parent -1) containing no ancestor-descendant pair.
std::size_t brute_antichains(const std::vector<int>& parent);

/// Number of multisets of total size n from objects with `kinds[s]` kinds
/// of size s (direct dynamic program).
BigInt multiset_count(const std::vector<long>& kinds, int n);

/// C(2m, m) / (m + 1).
BigInt catalan(int m);

// ---- template definitions ----

template <class Rng>
PlainTree random_tree(int n, Rng& rng) {
    if (n <= 2) return n == 1 ? PlainTree{1, {}, {}} : PlainTree{2, {{0, 1}}, {}};
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& x : seq) x = static_cast<int>(rng() % static_cast<unsigned>(n));
    return decode_pruefer(seq);
}

template <class F>
void for_each_sorted_pruefer_tree(int n, F&& emit) {
    if (n == 1) {
        emit(PlainTree{1, {}, {}});
        return;
    }
    if (n == 2) {
        emit(PlainTree{2, {{0, 1}}, {}});
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        emit(decode_pruefer(seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) --i;
        if (i < 0) return;
        ++seq[i];
        for (int j = i + 1; j < n - 2; ++j) seq[j] = seq[i];
    }
}

template <class F>
void for_each_pruefer_tree(int n, F&& emit) {
    if (n <= 2) {
        for_each_sorted_pruefer_tree(n, emit);
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        emit(decode_pruefer(seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) return;
        ++seq[i];
    }
}

}  // namespace limbforge::oracle
