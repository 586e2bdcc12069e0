#include <doctest.h>

#include <random>

#include "limbforge/constructions.hpp"
#include "limbforge/error.hpp"
#include "limbforge/spectra.hpp"
#include "limbforge/verify/oracles.hpp"

using namespace limbforge;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("constructions") {
    TEST_CASE("one-vertex extension") {
        const auto t = schwenk_tree();
        const auto ext = one_vertex_extension(t, {2, 5});
        CHECK(ext.apex == 10);
        CHECK(ext.graph.neighbors(10) == std::vector<VertexId>{2, 5});
        CHECK(ext.graph.weight(10) == 1);
    }

    TEST_CASE("one-sum matches its polynomial formula") {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 60; ++trial) {
            auto h = oracle::random_tree(1 + static_cast<int>(rng() % 6), rng);
            auto k = oracle::random_tree(1 + static_cast<int>(rng() % 6), rng);
            for (int v = 0; v < h.n; ++v) h.weight.push_back(1 + static_cast<int>(rng() % 3));
            for (int v = 0; v < k.n; ++v) k.weight.push_back(1 + static_cast<int>(rng() % 3));
            const auto hg = oracle::to_weighted_graph(h), kg = oracle::to_weighted_graph(k);
            const VertexId u = static_cast<VertexId>(rng() % h.n), v = static_cast<VertexId>(rng() % k.n);
            const auto s = one_sum(hg, u, kg, v);
            CHECK(s.graph.order() == hg.order() + kg.order() - 1);
            CHECK(s.right_ids.at(v) == u);
            CHECK(s.merged == u);
            CHECK(one_sum_char_poly(hg, u, kg, v) == char_poly(s.graph, true));
            CHECK(one_sum_char_poly(hg, u, kg, v) == oracle::cofactor_char_poly(s.graph, true));
        }
        const Edge es[] = {{0, 1}};
        CHECK(code_of([&] { one_sum(make_graph(2, es), 0, make_graph(2, es), 0, 0); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("extension pair over cospectral sets") {
        const auto base = fixture(NamedFixture::two_schwenk_seed);
        const auto [g1, g2] = extension_cospectral_pair(base, {5, 12}, {5}, {12});
        CHECK(char_poly(g1) == char_poly(g2));
        CHECK_FALSE(are_isomorphic(g1, g2));
        CHECK(code_of([&] { extension_cospectral_pair(base, {2, 12}, {2, 12}, {2}); }) ==
              ErrorCode::HypothesisViolated);
        CHECK(code_of([&] { extension_cospectral_pair(base, {2, 5}, {2}, {5}); }) == ErrorCode::HypothesisViolated);
        CHECK(code_of([&] { extension_cospectral_pair(base, {2, 13}, {2}, {13}); }) == ErrorCode::HypothesisViolated);
    }

    TEST_CASE("seed validation") {
        const auto base = fixture(NamedFixture::two_schwenk_seed);
        CHECK(code_of([&] { CospectralSeed(base, {{2, 12}, {2, 3}}); }) == ErrorCode::HypothesisViolated);
        CHECK(code_of([&] { CospectralSeed(base, {{2}}); }) == ErrorCode::HypothesisViolated);
        CHECK(code_of([&] { k_cospectral_construction(CospectralSeed(base, {{2, 12}})); }) ==
              ErrorCode::HypothesisViolated);
    }

    TEST_CASE("two-copy construction") {
        const auto res = k_cospectral_construction(two_schwenk_seed());
        CHECK(res.graph.order() == 58);
        CHECK(res.graph.is_tree());
        CHECK(res.designated.size() == 6);
        CHECK(res.set_apexes.size() == 3);
        CHECK(res.cospectral_in_graph);
        CHECK(res.cospectral_without_apex);
        CHECK(res.designated_orbits == 4u);
        CHECK(res.cross_set_nonsimilar == true);
        CHECK(res.removals_nonisomorphic == true);
        CHECK(are_isomorphic(res.graph, fixture(NamedFixture::figure_construction)));
    }

    TEST_CASE("attaching keeps the designated vertices cospectral") {
        const auto res = k_cospectral_construction(two_schwenk_seed());
        const Edge es[] = {{0, 1}, {1, 2}, {1, 3}};
        const auto host = make_graph(4, es).with_weight(1, 3);
        for (bool weighted : {false, true}) {
            const auto out = attach_preserving(host, 1, res.graph, res.designated, res.apex, weighted);
            CHECK(out.graph.order() == host.order() + res.graph.order() - 1);
            CHECK(out.graph.weight(out.merged) == 3);
            CHECK(pairwise_cospectral(out.graph, out.designated, weighted));
        }
        CHECK(code_of([&] { attach_preserving(host, 1, res.graph, res.designated, res.designated[0]); }) ==
              ErrorCode::HypothesisViolated);
    }

    TEST_CASE("fixtures") {
        for (auto f : {NamedFixture::schwenk_tree, NamedFixture::cyclic_cospectral, NamedFixture::two_schwenk_seed,
                       NamedFixture::figure_construction}) {
            CHECK(parse_fixture(to_string(f)) == f);
            CHECK_FALSE(fixture_labels(f).empty());
        }
        CHECK(code_of([] { parse_fixture("nope"); }) == ErrorCode::InvalidArgument);
        const auto cyc = fixture(NamedFixture::cyclic_cospectral);
        CHECK_FALSE(cyc.is_forest());
        const auto l = fixture_labels(NamedFixture::cyclic_cospectral);
        CHECK(pairwise_cospectral(cyc, {l.at("a"), l.at("b")}));
        CHECK_FALSE(are_similar(cyc, l.at("a"), l.at("b")));
        CHECK(fixture(NamedFixture::figure_construction).order() == 58);
    }

    TEST_CASE("multiset seed") {
        const auto seed = multiset_seed(schwenk_tree(), {kSchwenkA, kSchwenkB}, 2);
        CHECK(seed.sets().size() == 3);
        CHECK(seed.components() == 2);
        const auto res = k_cospectral_construction(seed);
        CHECK(res.cospectral_in_graph);
    }
}
