#include <doctest.h>

#include "limbforge/verify/oracles.hpp"

using namespace limbforge;

TEST_SUITE("oracles") {
    TEST_CASE("Pruefer decoding") {
        const auto t = oracle::decode_pruefer({3, 3, 3});
        CHECK(t.n == 5);
        CHECK(t.edges.size() == 4);
        CHECK(oracle::to_weighted_graph(t).is_tree());
        std::size_t labeled = 0;
        oracle::for_each_pruefer_tree(5, [&](const oracle::PlainTree&) { ++labeled; });
        CHECK(labeled == 125);
    }

    TEST_CASE("shape counts from both sequence sets") {
        const std::vector<std::size_t> rooted{1, 1, 2, 4, 9, 20, 48};
        const std::vector<std::size_t> free{1, 1, 1, 2, 3, 6, 11};
        for (int n = 1; n <= 7; ++n) {
            CHECK(oracle::rooted_shapes(n, true).size() == rooted[n - 1]);
            CHECK(oracle::rooted_shapes(n).size() == rooted[n - 1]);
            CHECK(oracle::free_shapes(n, true).size() == free[n - 1]);
            CHECK(oracle::free_shapes(n).size() == free[n - 1]);
        }
    }

    TEST_CASE("weighted counts at small weight") {
        CHECK(oracle::weighted_rooted_trees(3).size() == 5);
        CHECK(oracle::weighted_free_trees(3).size() == 3);
    }

    TEST_CASE("graphs up to isomorphism") {
        const std::vector<std::size_t> counts{1, 2, 4, 11, 34, 156};
        for (int n = 1; n <= 6; ++n) CHECK(oracle::graphs_up_to_isomorphism(n).size() == counts[n - 1]);
    }

    TEST_CASE("cofactor determinant of small graphs") {
        const Edge es[] = {{0, 1}};
        CHECK(oracle::cofactor_char_poly(make_graph(2, es), false).to_string() == "x^2 - 1");
        const WeightedGraph tri({{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 2}, {0, 2}});
        CHECK(oracle::cofactor_char_poly(tri, false).to_string() == "x^3 - 3*x - 2");
    }

    TEST_CASE("antichains, multisets, Catalan numbers") {
        CHECK(oracle::brute_antichains({-1, 0, 0}) == 5);
        CHECK(oracle::brute_antichains({-1, 0, 1}) == 4);
        CHECK(oracle::multiset_count({0, 1, 1}, 5) == 3);
        CHECK(oracle::catalan(0) == 1);
        CHECK(oracle::catalan(5) == 42);
    }

    TEST_CASE("limb oracle") {
        const oracle::PlainTree host{4, {{0, 1}, {0, 2}, {0, 3}}, {}, 0};
        const oracle::PlainTree cherry{3, {{0, 1}, {0, 2}}, {}, 0};
        CHECK(oracle::carries_pattern(host, 0, cherry, oracle::PatternMode::limb));
        CHECK_FALSE(oracle::carries_pattern(host, 0, cherry, oracle::PatternMode::maximal));
        CHECK_FALSE(oracle::avoids_pattern(host, cherry, oracle::PatternMode::limb));
    }
}
