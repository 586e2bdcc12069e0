#include <doctest.h>

#include "limbforge/census.hpp"
#include "limbforge/error.hpp"

using namespace limbforge;

namespace {

std::vector<std::pair<long, long>> hits_totals(const std::vector<CensusRow>& rows) {
    std::vector<std::pair<long, long>> out;
    for (const auto& r : rows) out.emplace_back(static_cast<long>(r.hits), static_cast<long>(r.total));
    return out;
}

}  // namespace

TEST_SUITE("census") {
    // Snapshot of the exhaustive run; hit counts grow, the fraction does not.
    TEST_CASE("cospectral mate census snapshot, free trees n=9..14") {
        std::vector<int> seen;
        const auto rows = census(CensusProperty::has_cospectral_mate, TreeFamily::free, 9, 14, {},
                                 [&](const CensusRow& r) { seen.push_back(r.n); });
        CHECK(seen == std::vector<int>{9, 10, 11, 12, 13, 14});
        CHECK(hits_totals(rows) ==
              std::vector<std::pair<long, long>>{{0, 47}, {2, 106}, {4, 235}, {8, 551}, {18, 1301}, {40, 3159}});
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].hits >= rows[i - 1].hits);
        for (const auto& r : rows) CHECK(r.fraction == BigRational(r.hits, r.total));
    }

    TEST_CASE("limb census is zero below the limb size") {
        const auto rows = census(CensusProperty::has_limb, TreeFamily::free, 1, 10);
        for (const auto& r : rows) {
            if (r.n <= 8) CHECK(r.hits == 0);
        }
        CHECK(rows.back().hits > 0);
    }

    TEST_CASE("two cospectral non-similar vertices first appear at n=9") {
        CensusParams p;
        p.k = 2;
        const auto rows = census(CensusProperty::has_k_cospectral_vertices, TreeFamily::free, 7, 10, p);
        CHECK(hits_totals(rows) == std::vector<std::pair<long, long>>{{0, 11}, {0, 23}, {1, 47}, {0, 106}});
        CHECK(rows.front().k == 2);
    }

    TEST_CASE("limits and parsing") {
        CHECK_THROWS_AS(census(CensusProperty::has_limb, TreeFamily::free, 1, 17), Error);
        CHECK_THROWS_AS(census(CensusProperty::has_limb, TreeFamily::weighted_free, 1, 11), Error);
        CHECK_THROWS_AS(census(CensusProperty::has_limb, TreeFamily::free, 5, 4), Error);
        CHECK(parse_census_property("has_limb") == CensusProperty::has_limb);
        CHECK(parse_tree_family("weighted-free") == TreeFamily::weighted_free);
        CHECK_THROWS_AS(parse_tree_family("forest"), Error);
    }
}
