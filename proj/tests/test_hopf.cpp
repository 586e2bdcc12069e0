#include <doctest.h>

#include "limbforge/hopf.hpp"
#include "limbforge/verify/oracles.hpp"

using namespace limbforge;

TEST_SUITE("hopf") {
    TEST_CASE("coproduct of the two-vertex path") {
        const CanonicalTree t(1, {leaf()});
        const auto terms = coproduct(t);
        REQUIRE(terms.size() == 3);
        int unit_left = 0, unit_right = 0;
        for (const auto& term : terms) {
            CHECK(term.coefficient == 1);
            if (term.left.empty()) ++unit_left;
            if (!term.right) ++unit_right;
        }
        CHECK(unit_left == 1);
        CHECK(unit_right == 1);
    }

    TEST_CASE("cherry merges equal terms") {
        const CanonicalTree t(1, {leaf(), leaf()});
        BigInt total = 0;
        bool merged = false;
        for (const auto& term : coproduct(t)) {
            total += term.coefficient;
            if (term.coefficient == 2) merged = true;
        }
        CHECK(total == 5);
        CHECK(merged);
        CHECK(antichains(t).size() == 5);
    }

    TEST_CASE("laws on every small tree") {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& t : enumerate_rooted(n)) {
                CHECK(check_counit(t));
                CHECK(check_coassociativity(t));
                CHECK(check_grading(t));
                CHECK(count_antichains(t) == antichains(t).size());
            }
        }
        for (const auto& t : enumerate_weighted_rooted(5)) {
            CHECK(check_coassociativity(t));
            CHECK(check_grading(t));
        }
    }

    TEST_CASE("antichains are sorted preorder positions") {
        const CanonicalTree t(1, {CanonicalTree(1, {leaf()}), leaf()});
        const auto acs = antichains(t);
        CHECK(std::find(acs.begin(), acs.end(), std::vector<int>{}) != acs.end());
        CHECK(std::find(acs.begin(), acs.end(), std::vector<int>{0}) != acs.end());
        for (const auto& a : acs) CHECK(std::is_sorted(a.begin(), a.end()));
    }
}
