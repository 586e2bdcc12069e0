#include <doctest.h>

#include <random>

#include "limbforge/error.hpp"
#include "limbforge/polynomial.hpp"
#include "limbforge/spectra.hpp"
#include "limbforge/verify/oracles.hpp"

using namespace limbforge;

namespace {

WeightedGraph random_graph(std::mt19937_64& rng, int n, int max_weight, int edge_percent) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v) vs.push_back({v, 1 + static_cast<int>(rng() % max_weight)});
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (static_cast<int>(rng() % 100) < edge_percent) es.emplace_back(a, b);
        }
    }
    return WeightedGraph(vs, es);
}

}  // namespace

TEST_SUITE("spectra") {
    TEST_CASE("integer polynomials") {
        const auto x = IntPolynomial::x();
        const auto p = x * x - IntPolynomial(1);
        CHECK(p.to_string() == "x^2 - 1");
        CHECK(p.exact_div(x - IntPolynomial(1)) == x + IntPolynomial(1));
        CHECK_THROWS_AS(p.exact_div(x), Error);
        CHECK(p.derivative() == IntPolynomial(2) * x);
        CHECK(IntPolynomial().degree() == -1);
        CHECK((x * x * x - IntPolynomial(2) * x).to_string() == "x^3 - 2*x");
        CHECK(p.is_monic());
    }

    TEST_CASE("the 9-vertex tree") {
        const auto t = schwenk_tree();
        CHECK(char_poly(t).to_string() == "x^9 - 8*x^7 + 20*x^5 - 17*x^3 + 4*x");
        CHECK(char_poly_determinant(t) == char_poly(t));
        CHECK(char_poly(t.without_vertex(kSchwenkA)) == char_poly(t.without_vertex(kSchwenkB)));
        CHECK_FALSE(are_similar(t, kSchwenkA, kSchwenkB));
        const auto classes = cospectral_vertices(t);
        bool found = false;
        for (const auto& c : classes) {
            if (c.vertices == std::vector<VertexId>{kSchwenkA, kSchwenkB}) found = true;
        }
        CHECK(found);
    }

    TEST_CASE("determinant, tree recursion and cofactor oracle agree") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = random_graph(rng, 1 + static_cast<int>(rng() % 8), 3, 40);
            for (bool weighted : {false, true}) {
                CHECK(char_poly_determinant(g, weighted) == oracle::cofactor_char_poly(g, weighted));
                CHECK(char_poly(g, weighted) == char_poly_determinant(g, weighted));
            }
            auto t = oracle::random_tree(1 + static_cast<int>(rng() % 9), rng);
            for (int v = 0; v < t.n; ++v) t.weight.push_back(1 + static_cast<int>(rng() % 3));
            const auto tg = oracle::to_weighted_graph(t);
            CHECK(char_poly_tree(tg) == oracle::cofactor_char_poly(tg, true));
        }
        CHECK_THROWS_AS(char_poly_tree(random_graph(rng, 3, 1, 100)), Error);
    }

    TEST_CASE("identities") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_graph(rng, 1 + static_cast<int>(rng() % 5), 3, 50);
            const auto b = random_graph(rng, 1 + static_cast<int>(rng() % 5), 3, 50);
            CHECK(check_union_identity(a, b, true).holds);
            CHECK(check_derivative_identity(a, true).holds);
            CHECK(check_derivative_identity(a, false).holds);
        }
        const auto t = schwenk_tree();
        CHECK(check_cut_edge_identity(t, {3, 9}).holds);
        const WeightedGraph tri({{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 2}, {0, 2}});
        CHECK_THROWS_AS(check_cut_edge_identity(tri, {0, 1}), Error);
    }

    TEST_CASE("orbits and isomorphism against brute force") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 150; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 7);
            const auto g = random_graph(rng, n, 2, 45);
            CHECK(similarity_orbits(g) == oracle::brute_orbits(g));
            const auto h = random_graph(rng, n, 2, 45);
            CHECK(are_isomorphic(g, h) == oracle::brute_isomorphic(g, h));
            // a relabelled copy is always isomorphic
            std::vector<Vertex> vs;
            for (const auto& v : g.vertices()) vs.push_back({100 - v.id, v.weight});
            std::vector<Edge> es;
            for (auto [a, b] : g.edges()) es.emplace_back(100 - a, 100 - b);
            const WeightedGraph copy(vs, es);
            const auto m = find_isomorphism(g, copy);
            REQUIRE(m.has_value());
            for (auto [a, b] : g.edges()) CHECK(copy.has_edge(m->at(a), m->at(b)));
        }
        for (int trial = 0; trial < 60; ++trial) {
            auto t = oracle::random_tree(1 + static_cast<int>(rng() % 9), rng);
            const auto g = oracle::to_weighted_graph(t);
            CHECK(similarity_orbits(g) == oracle::brute_orbits(g));
        }
    }

    TEST_CASE("size limit applies to non-forests only") {
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (int v = 0; v < 31; ++v) {
            vs.push_back({v, 1});
            es.emplace_back(v, (v + 1) % 31);
        }
        const WeightedGraph cycle(vs, es);
        CHECK_THROWS_AS(similarity_orbits(cycle), Error);
        es.pop_back();
        CHECK(similarity_orbits(WeightedGraph(vs, es)).size() == 16);
    }

    TEST_CASE("mate of a tree carrying the limb") {
        const auto t = schwenk_tree();
        const auto m = schwenk_mate(t);
        REQUIRE(m.has_value());
        CHECK(char_poly(*m) == char_poly(t));
        const Edge es[] = {{0, 1}};
        CHECK_FALSE(schwenk_mate(make_graph(2, es)).has_value());
    }
}
