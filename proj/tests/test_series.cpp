#include <doctest.h>

#include "limbforge/error.hpp"
#include "limbforge/series.hpp"
#include "limbforge/verify/oracles.hpp"

using namespace limbforge;

namespace {

std::vector<long> as_longs(const RationalSeries& s) {
    std::vector<long> out;
    for (const auto& c : s.integer_coefficients()) out.push_back(static_cast<long>(c));
    return out;
}

}  // namespace

TEST_SUITE("series") {
    TEST_CASE("multiset transform") {
        CHECK(as_longs(mset_exp(RationalSeries(5))) == std::vector<long>{1, 0, 0, 0, 0, 0});
        CHECK(as_longs(mset_exp(RationalSeries::monomial(5, 1))) == std::vector<long>{1, 1, 1, 1, 1, 1});
        const auto two = RationalSeries::monomial(7, 1) + RationalSeries::monomial(7, 2);
        CHECK(as_longs(mset_exp(two)) == std::vector<long>{1, 1, 2, 2, 3, 3, 4, 4});
        CHECK_THROWS_AS(mset_exp(RationalSeries::monomial(3, 0)), Error);
    }

    TEST_CASE("multiset transform against a direct count") {
        const auto t = series_rooted(12);
        const auto m = mset_exp(t);
        std::vector<long> kinds;
        for (const auto& c : t.integer_coefficients()) kinds.push_back(static_cast<long>(c));
        for (int n = 0; n <= 12; ++n) CHECK(m[n] == BigRational(oracle::multiset_count(kinds, n)));
    }

    TEST_CASE("rooted and weighted series") {
        CHECK(as_longs(series_rooted(10)) == std::vector<long>{0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719});
        const auto tw = as_longs(series_weighted_rooted(4));
        CHECK(tw == std::vector<long>{0, 1, 2, 5, 13});
        CHECK(as_longs(series_weighted_free(3)) == std::vector<long>{0, 1, 2, 3});
        for (int w = 1; w <= 6; ++w) {
            CHECK(series_weighted_rooted(6)[w] == BigRational(oracle::weighted_rooted_trees(w).size()));
            CHECK(series_weighted_free(6)[w] == BigRational(oracle::weighted_free_trees(w).size()));
        }
    }

    TEST_CASE("fixed points reproduce themselves") {
        const int N = 20;
        const auto t = series_rooted(N);
        CHECK(RationalSeries::monomial(N, 1) * mset_exp(t) == t);
        const auto s = series_avoid_limb_weighted(4, N);
        const auto pre = RationalSeries::geometric_tail(N) - RationalSeries::monomial(N, 4);
        CHECK(pre * mset_exp(s) == s);
        const auto star = series_avoid_maximal_limb(3, N);
        CHECK(RationalSeries::monomial(N, 1) * mset_exp(star) - RationalSeries::monomial(N, 3) == star);
        CHECK(series_weighted_free(N) == unroot(series_weighted_rooted(N)));
    }

    TEST_CASE("avoidance series edge cases") {
        CHECK(as_longs(series_avoid_limb_rooted(2, 6)) == std::vector<long>{0, 1, 0, 0, 0, 0, 0});
        CHECK(as_longs(series_avoid_maximal_limb(1, 6)) == std::vector<long>{0, 0, 0, 0, 0, 0, 0});
        const auto t = series_rooted(12);
        const auto s = series_avoid_limb_rooted(5, 12);
        for (int n = 0; n < 5; ++n) CHECK(s[n] == t[n]);
        const auto tw = series_weighted_rooted(12), sw = series_avoid_limb_weighted(4, 12);
        for (int n = 0; n < 4; ++n) CHECK(sw[n] == tw[n]);
        CHECK(sw[4] < tw[4]);
        for (int n = 0; n <= 12; ++n) CHECK(sw[n] <= tw[n]);
        CHECK(series_avoid_limb_weighted_free(3, 5)[1] == 1);
        CHECK_THROWS_AS(series_avoid_limb_rooted(1, 5), Error);
        CHECK_THROWS_AS(series_avoid_limb_weighted(2, 5), Error);
        CHECK_THROWS_AS(series_avoid_maximal_limb(0, 5), Error);
    }

    TEST_CASE("dominating bound") {
        const auto f = as_longs(series_dominating_bound(6));
        CHECK(f == std::vector<long>{0, 1, 2, 8, 40, 224, 1344});
        const auto big = series_dominating_bound(30).integer_coefficients();
        const auto tw = series_weighted_rooted(30).integer_coefficients();
        for (int n = 1; n <= 30; ++n) {
            CHECK(tw[n] <= big[n]);
            CHECK(big[n] == (BigInt(1) << (n - 1)) * oracle::catalan(n - 1));
        }
    }

    TEST_CASE("radius estimates") {
        RationalSeries geo(60);
        for (int n = 0; n <= 60; ++n) geo.set(n, BigRational(BigInt(1) << n));
        const auto r = estimate_radius(geo, RadiusMethod::ratio);
        CHECK(r.value == doctest::Approx(0.5).epsilon(0.01));
        CHECK(r.truncation == 60);
        const auto t = series_rooted(50);
        const auto u = estimate_radius(t, RadiusMethod::solve_unit);
        CHECK(evaluate(t, u.value) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(estimate_radius(series_avoid_limb_weighted(3, 30), RadiusMethod::solve_unit).value >
              estimate_radius(series_weighted_rooted(30), RadiusMethod::solve_unit).value);
        RationalSeries neg(3, {0, 1, -1, 1});
        CHECK_THROWS_AS(estimate_radius(neg, RadiusMethod::ratio), Error);
        CHECK_THROWS_AS(estimate_radius(RationalSeries::monomial(3, 1, BigRational(1, 4)), RadiusMethod::solve_unit),
                        Error);
    }
}
