#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limbforge/bigint.hpp"

namespace limbforge {

/// Power series truncated at order N (coefficients c_0..c_N), exact rationals.
/// Products and sums truncate to the smaller order of the operands.
class RationalSeries {
public:
    explicit RationalSeries(int order = 0);
    RationalSeries(int order, std::vector<BigRational> coefficients);

    static RationalSeries monomial(int order, int degree, const BigRational& coefficient = 1);
    /// x + x^2 + ... + x^N, i.e. x/(1-x) truncated.
    static RationalSeries geometric_tail(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^n; zero beyond the truncation order.
    BigRational operator[](int n) const;
    void set(int n, BigRational value);
    const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }

    RationalSeries truncated(int order) const;
    /// S(x^k).
    RationalSeries substitute_power(int k) const;

    bool is_integral() const;
    /// Nonnegative integer coefficients throughout.
    bool is_counting() const;
    /// Throws `Internal` if some coefficient is not an integer.
    std::vector<BigInt> integer_coefficients() const;

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const BigRational& c, const RationalSeries& a);
    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
    std::vector<BigRational> coeffs_;
};

/// Multiset (Euler) transform exp(sum_{i>=1} S(x^i)/i), same truncation as S.
/// Throws `NonzeroConstantTerm` if S(0) != 0.
RationalSeries mset_exp(const RationalSeries& s);

/// Solves S = prefactor * MSET(S) - subtrahend degree by degree up to
/// `order`. Requires prefactor(0) = 0 so coefficient n of the right side only
/// involves coefficients of S below n.
RationalSeries solve_mset_fixed_point(const RationalSeries& prefactor,
                                      const RationalSeries& subtrahend, int order);

constexpr int kDefaultSeriesOrder = 40;

/// Rooted trees: T = x MSET(T).
RationalSeries series_rooted(int order = kDefaultSeriesOrder);
/// Weighted rooted trees: T_W = x/(1-x) MSET(T_W).
RationalSeries series_weighted_rooted(int order = kDefaultSeriesOrder);
/// Rooted trees without a given limb on `limb_size` >= 2 vertices:
/// S = (x - x^l) MSET(S).
RationalSeries series_avoid_limb_rooted(int limb_size, int order = kDefaultSeriesOrder);
/// Weighted rooted trees without a given weighted limb of total weight
/// `limb_weight` >= 3: S_W = (x/(1-x) - x^l) MSET(S_W).
RationalSeries series_avoid_limb_weighted(int limb_weight, int order = kDefaultSeriesOrder);
/// Rooted trees without a given `limb_size`-vertex tree as a maximal limb:
/// S* = x MSET(S*) - x^l.
RationalSeries series_avoid_maximal_limb(int limb_size, int order = kDefaultSeriesOrder);
/// Weighted free trees: W = T_W + (T_W(x^2) - T_W^2)/2.
RationalSeries series_weighted_free(int order = kDefaultSeriesOrder);
/// Weighted free trees without a given limb: S_U = S_W + (S_W(x^2) - S_W^2)/2.
RationalSeries series_avoid_limb_weighted_free(int limb_weight, int order = kDefaultSeriesOrder);
/// Majorant of T_W: f_1 = 1, f_{n+1} = 2 sum_{i=1}^{n} f_i f_{n-i+1}.
RationalSeries series_dominating_bound(int order = kDefaultSeriesOrder);

/// Dissimilarity step shared by the free-tree series: R + (R(x^2) - R^2)/2.
RationalSeries unroot(const RationalSeries& rooted);

enum class RadiusMethod { ratio, solve_unit };

const char* to_string(RadiusMethod method) noexcept;

struct RadiusEstimate {
    double value = 0.0;
    RadiusMethod method = RadiusMethod::ratio;
    int truncation = 0;
};

/// Numeric radius-of-convergence estimate from a truncated counting series.
///
/// `ratio` returns c_{N-1}/c_N. `solve_unit` bisects on (0, 1) for the x with
/// s(x) = 1, or s(x) = 1 - x^l when `unit_shift_power` = l (the maximal-limb
/// family). Throws `NonPositive` for negative or vanishing coefficients and
/// `NoRoot` when the target is not bracketed by (0, 1).
RadiusEstimate estimate_radius(const RationalSeries& s, RadiusMethod method,
                               std::optional<int> unit_shift_power = std::nullopt);

/// Truncated series evaluated at x in long double.
long double evaluate(const RationalSeries& s, long double x);

}  // namespace limbforge
