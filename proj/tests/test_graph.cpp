#include <doctest.h>

#include "limbforge/error.hpp"
#include "limbforge/graph.hpp"

using namespace limbforge;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("construction validates its invariants") {
        CHECK(code_of([] { WeightedGraph({{1, 1}, {1, 1}}, {}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph({{1, 0}}, {}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph({{1, 1}}, {{1, 2}}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph({{1, 1}}, {{1, 1}}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph({{1, 1}, {2, 1}}, {{1, 2}, {2, 1}}); }) == ErrorCode::InvalidGraph);
        CHECK(code_of([] { WeightedGraph({{1, 1}}, {}, 7); }) == ErrorCode::InvalidGraph);
        const WeightedGraph g({{1, 1}}, {});
        CHECK(code_of([&] { (void)g.index_of(3); }) == ErrorCode::UnknownVertex);
    }

    TEST_CASE("edges are normalised and queries agree") {
        const WeightedGraph g({{5, 2}, {3, 1}, {9, 1}}, {{5, 3}, {9, 5}});
        CHECK(g.edges() == std::vector<Edge>{{3, 5}, {5, 9}});
        CHECK(g.has_edge(3, 5));
        CHECK(g.has_edge(5, 3));
        CHECK_FALSE(g.has_edge(3, 9));
        CHECK(g.neighbors(5) == std::vector<VertexId>{3, 9});
        CHECK(g.degree(5) == 2);
        CHECK(g.total_weight() == 4);
        CHECK(g.max_id() == 9);
        CHECK(g.is_tree());
    }

    TEST_CASE("components, forests and cycles") {
        const WeightedGraph tri({{0, 1}, {1, 1}, {2, 1}, {3, 1}}, {{0, 1}, {1, 2}, {0, 2}});
        CHECK(tri.components() == std::vector<std::vector<VertexId>>{{0, 1, 2}, {3}});
        CHECK_FALSE(tri.is_forest());
        CHECK_FALSE(tri.is_connected());
        const auto path = tri.without_edge(0, 2);
        CHECK(path.is_forest());
        CHECK_FALSE(path.is_tree());
        CHECK(path.without_vertex(3).is_tree());
    }

    TEST_CASE("derived graphs") {
        const Edge es[] = {{0, 1}, {1, 2}};
        const auto p = make_graph(3, es, 0);
        CHECK(p.root() == 0);
        CHECK(p.with_root(std::nullopt).root() == std::nullopt);
        CHECK(p.with_weight(1, 4).weight(1) == 4);
        CHECK(p.with_weight(1, 4).unweighted().weight(1) == 1);
        const auto s = p.shifted(10);
        CHECK(s.ids() == std::vector<VertexId>{10, 11, 12});
        CHECK(s.root() == 10);
        const VertexId keep[] = {0, 1};
        CHECK(p.induced(keep).size() == 1);
        auto [u, shift] = disjoint_union(p, p);
        CHECK(u.order() == 6);
        CHECK(shift == 3);
        CHECK(u.components().size() == 2);
    }
}
