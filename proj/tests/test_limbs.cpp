#include <doctest.h>

#include "limbforge/error.hpp"
#include "limbforge/limbs.hpp"
#include "limbforge/spectra.hpp"
#include "limbforge/verify/oracles.hpp"

using namespace limbforge;

namespace {

const CanonicalTree kCherry(1, {leaf(), leaf()});
const CanonicalTree kPath3(1, {CanonicalTree(1, {leaf()})});

}  // namespace

TEST_SUITE("limbs") {
    TEST_CASE("limb and maximal-limb tests") {
        // root 0 with children 1, 2, 3; 3 has children 4, 5
        const Edge es[] = {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}};
        const auto g = make_graph(6, es, 0);
        const LimbSpec cherry(kCherry, LimbMode::limb);
        CHECK(has_limb(g, cherry, 0));
        CHECK(has_limb(g, cherry, 3));
        CHECK_FALSE(has_limb(g, cherry, 1));
        const LimbSpec cherry_max(kCherry, LimbMode::maximal);
        CHECK_FALSE(has_limb(g, cherry_max, 0));
        CHECK(has_limb(g, cherry_max, 3));
        CHECK(limb_occurrences(g, cherry).size() == 2);
        CHECK(branches_at(g, 0).size() == 3);
        CHECK(branches_at_free(g.with_root(std::nullopt), 3).size() == 3);
        CHECK(has_limb_free(g.with_root(std::nullopt), cherry, 3));
        CHECK_FALSE(has_limb_free(g.with_root(std::nullopt), LimbSpec(kPath3, LimbMode::limb), 0));
    }

    TEST_CASE("pattern validation") {
        CHECK_THROWS_AS(LimbSpec(leaf(), LimbMode::limb), Error);
        CHECK_NOTHROW(LimbSpec(leaf(), LimbMode::maximal));
        const Edge es[] = {{0, 1}};
        CHECK_THROWS_AS(has_limb_free(make_graph(2, es), LimbSpec(kCherry, LimbMode::maximal), 0), Error);
        CHECK_THROWS_AS(limb_occurrences(make_graph(2, es), LimbSpec(kCherry, LimbMode::limb)), Error);
    }

    TEST_CASE("count_avoiding agrees with the oracle on every family") {
        const oracle::PlainTree cherry{3, {{0, 1}, {0, 2}}, {}, 0};
        const oracle::PlainTree heavy{2, {{0, 1}}, {1, 2}, 0};
        for (int n = 1; n <= 7; ++n) {
            const LimbSpec c(kCherry, LimbMode::limb);
            CHECK(count_avoiding(n, c) == oracle::count_avoiding(n, cherry, oracle::PatternMode::limb, false, false));
            CHECK(count_avoiding(n, c, TreeFamily::free) ==
                  oracle::count_avoiding(n, cherry, oracle::PatternMode::limb, false, true));
            const LimbSpec h(CanonicalTree(1, {leaf(2)}), LimbMode::limb);
            CHECK(count_avoiding(n, h, TreeFamily::weighted_rooted) ==
                  oracle::count_avoiding(n, heavy, oracle::PatternMode::limb, true, false));
            CHECK(count_avoiding(n, h, TreeFamily::weighted_free) ==
                  oracle::count_avoiding(n, heavy, oracle::PatternMode::limb, true, true));
        }
    }

    TEST_CASE("replacement swaps branches and keeps the rest") {
        const Edge es[] = {{0, 1}, {0, 2}, {0, 3}};
        const auto star = make_graph(4, es, 0);
        const auto out = replace_limb(star, 0, kCherry, kPath3);
        CHECK(out.order() == 4);
        CHECK(canonicalize_rooted(out) == CanonicalTree(1, {leaf(), CanonicalTree(1, {leaf()})}));
        CHECK_THROWS_AS(replace_limb(star, 1, kCherry, kPath3), Error);
    }

    TEST_CASE("the Schwenk limb swap preserves the polynomial") {
        const auto limb = schwenk_tree();
        const auto at_a = canonicalize_rooted_at(limb, kSchwenkA);
        const auto at_b = canonicalize_rooted_at(limb, kSchwenkB);
        const auto host = to_graph(CanonicalTree(1, {at_a, leaf()}));
        const auto occ = limb_occurrences(host, LimbSpec(at_a, LimbMode::limb));
        REQUIRE_FALSE(occ.empty());
        const auto swapped = replace_limb(host, occ.front().vertex, at_a, at_b);
        CHECK(char_poly(swapped) == char_poly(host));
    }

    TEST_CASE("normalisation terminates whatever the order") {
        const auto t = to_graph(CanonicalTree(1, {kCherry, kCherry, CanonicalTree(1, {kCherry})}));
        const auto first = normalize_by_replacement(t, kCherry, kPath3, OccurrenceOrder::first);
        const auto last = normalize_by_replacement(t, kCherry, kPath3, OccurrenceOrder::last);
        const auto rnd = normalize_by_replacement(t, kCherry, kPath3, OccurrenceOrder::random, 99);
        for (const auto* g : {&first, &last, &rnd}) {
            CHECK_FALSE(contains_limb(canonicalize_rooted(*g), LimbSpec(kCherry, LimbMode::limb)));
            CHECK(g->order() == t.order());
        }
        CHECK_THROWS_AS(normalize_by_replacement(t, kCherry, kPath3, OccurrenceOrder::first, 0, 1), Error);
    }
}
