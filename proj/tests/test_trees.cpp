#include <doctest.h>

#include <random>

#include "limbforge/error.hpp"
#include "limbforge/trees.hpp"
#include "limbforge/verify/oracles.hpp"

using namespace limbforge;

TEST_SUITE("trees") {
    TEST_CASE("canonical codes ignore child order") {
        const CanonicalTree a(1, {leaf(), CanonicalTree(1, {leaf()})});
        const CanonicalTree b(1, {CanonicalTree(1, {leaf()}), leaf()});
        CHECK(a == b);
        CHECK(a.order() == 4);
        CHECK(CanonicalTree(2, {leaf(3)}).total_weight() == 5);
        CHECK(CanonicalTree(2, {leaf(3)}) != CanonicalTree(3, {leaf(2)}));
    }

    TEST_CASE("rooted and free canonical forms survive relabelling") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 10);
            auto t = oracle::random_tree(n, rng);
            const auto g = oracle::to_weighted_graph(t);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            oracle::PlainTree u = t;
            for (auto& [a, b] : u.edges) {
                a = perm[a];
                b = perm[b];
            }
            const auto h = oracle::to_weighted_graph(u);
            CHECK(canonicalize_free(g) == canonicalize_free(h));
            CHECK(canonicalize_rooted_at(g, 0) == canonicalize_rooted_at(h, perm[0]));
            CHECK(canonicalize_rooted(to_graph(canonicalize_rooted_at(g, 0))) == canonicalize_rooted_at(g, 0));
        }
    }

    TEST_CASE("free canonical form separates distinct trees") {
        for (int n = 1; n <= 9; ++n) {
            std::set<CanonicalCode> codes;
            for (const auto& t : oracle::free_shapes(n)) codes.insert(canonicalize_free(oracle::to_weighted_graph(t)));
            CHECK(codes.size() == oracle::free_shapes(n).size());
        }
    }

    TEST_CASE("enumerators agree with the Pruefer oracle") {
        for (int n = 1; n <= 9; ++n) {
            CHECK(enumerate_rooted(n).size() == oracle::rooted_shapes(n).size());
            CHECK(enumerate_free(n).size() == oracle::free_shapes(n).size());
        }
        for (int w = 1; w <= 6; ++w) {
            CHECK(enumerate_weighted_rooted(w).size() == oracle::weighted_rooted_trees(w).size());
            CHECK(enumerate_weighted_free(w).size() == oracle::weighted_free_trees(w).size());
        }
    }

    TEST_CASE("enumeration is sorted and duplicate free") {
        const auto ts = enumerate_rooted(8);
        CHECK(std::is_sorted(ts.begin(), ts.end()));
        CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
        for (const auto& t : ts) CHECK(t.order() == 8);
    }

    TEST_CASE("centroids and rootings") {
        const Edge es[] = {{0, 1}, {1, 2}, {2, 3}};
        const auto p4 = make_graph(4, es);
        CHECK(centroids(p4) == std::vector<VertexId>{1, 2});
        CHECK(canonical_rootings(p4).size() == 4);
        CHECK(free_canonical_tree(p4).order() == 4);
    }

    TEST_CASE("graph helpers") {
        const CanonicalTree t(1, {leaf(), CanonicalTree(2, {leaf()})});
        const auto g = to_graph(t, 5);
        CHECK(g.root() == 5);
        CHECK(g.order() == 4);
        CHECK(canonicalize_rooted(g) == t);
        auto [h, r] = attach_subtree(g, 5, CanonicalTree(1, {leaf()}));
        CHECK(h.order() == 6);
        CHECK(h.has_edge(5, r));
        CHECK(neighbor_subtrees(g, 5).size() == 2);
    }

    TEST_CASE("errors") {
        const WeightedGraph cyc({{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 2}, {0, 2}}, 0);
        CHECK_THROWS_AS(canonicalize_rooted(cyc), Error);
        const Edge es[] = {{0, 1}};
        CHECK_THROWS_AS(canonicalize_rooted(make_graph(2, es)), Error);
    }
}
