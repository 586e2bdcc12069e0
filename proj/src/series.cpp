#include "limbforge/series.hpp"

#include <algorithm>
#include <string>

#include "limbforge/error.hpp"

namespace limbforge {

RationalSeries::RationalSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

RationalSeries::RationalSeries(int order, std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(static_cast<std::size_t>(std::max(order, 0)) + 1);
}

RationalSeries RationalSeries::monomial(int order, int degree, const BigRational& coefficient) {
    RationalSeries s(order);
    if (degree >= 0 && degree <= order) s.coeffs_[degree] = coefficient;
    return s;
}

RationalSeries RationalSeries::geometric_tail(int order) {
    RationalSeries s(order);
    for (int n = 1; n <= order; ++n) s.coeffs_[n] = 1;
    return s;
}

BigRational RationalSeries::operator[](int n) const {
    if (n < 0 || n > order()) return 0;
    return coeffs_[n];
}

void RationalSeries::set(int n, BigRational value) {
    if (n < 0 || n > order()) {
        throw Error(ErrorCode::InvalidArgument, "coefficient index " + std::to_string(n) +
                                                    " outside truncation order");
    }
    coeffs_[n] = std::move(value);
}

RationalSeries RationalSeries::truncated(int order) const { return RationalSeries(order, coeffs_); }

RationalSeries RationalSeries::substitute_power(int k) const {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "substitution power must be positive");
    RationalSeries out(order());
    for (int n = 0; n * k <= order(); ++n) out.coeffs_[n * k] = coeffs_[n];
    return out;
}

bool RationalSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRational& c) { return denominator(c) == 1; });
}

bool RationalSeries::is_counting() const {
    return is_integral() &&
           std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c >= 0; });
}

std::vector<BigInt> RationalSeries::integer_coefficients() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (denominator(coeffs_[n]) != 1) {
            throw Error(ErrorCode::Internal, "coefficient " + std::to_string(n) + " is not integral");
        }
        out.push_back(numerator(coeffs_[n]));
    }
    return out;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    const int n = std::min(a.order(), b.order());
    RationalSeries out(n);
    for (int i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    const int n = std::min(a.order(), b.order());
    RationalSeries out(n);
    for (int i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    const int n = std::min(a.order(), b.order());
    RationalSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

RationalSeries operator*(const BigRational& c, const RationalSeries& a) {
    RationalSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.coeffs_[i] = c * a.coeffs_[i];
    return out;
}

namespace {

// Incremental MSET: A = exp(B), B = sum S(x^i)/i, via n A_n = sum_k (k B_k) A_{n-k}
// with k B_k = sum_{d | k} d S_d. Coefficient n of A needs S_1..S_n.
class MsetAccumulator {
public:
    explicit MsetAccumulator(int order) : weighted_b_(order + 1), a_(order + 1) { a_[0] = 1; }

    // Call with n = 1, 2, ... in order once s[1..n] are final.
    void advance(const std::vector<BigRational>& s, int n) {
        BigRational kb = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) kb += d * s[d];
        }
        weighted_b_[n] = kb;
        BigRational acc = 0;
        for (int k = 1; k <= n; ++k) acc += weighted_b_[k] * a_[n - k];
        a_[n] = acc / n;
    }

    const BigRational& operator[](int n) const { return a_[n]; }
    const std::vector<BigRational>& coefficients() const { return a_; }

private:
    std::vector<BigRational> weighted_b_;
    std::vector<BigRational> a_;
};

RationalSeries checked_counting(RationalSeries s, const char* which) {
    if (!s.is_counting()) {
        throw Error(ErrorCode::Internal,
                    std::string(which) + " produced a non-integral or negative coefficient");
    }
    return s;
}

}  // namespace

RationalSeries mset_exp(const RationalSeries& s) {
    if (s[0] != 0) {
        throw Error(ErrorCode::NonzeroConstantTerm, "MSET requires a series with zero constant term");
    }
    MsetAccumulator acc(s.order());
    for (int n = 1; n <= s.order(); ++n) acc.advance(s.coefficients(), n);
    return RationalSeries(s.order(), acc.coefficients());
}

RationalSeries solve_mset_fixed_point(const RationalSeries& prefactor,
                                      const RationalSeries& subtrahend, int order) {
    if (prefactor[0] != 0) {
        throw Error(ErrorCode::NonzeroConstantTerm, "fixed-point prefactor must vanish at 0");
    }
    std::vector<BigRational> s(static_cast<std::size_t>(std::max(order, 0)) + 1);
    MsetAccumulator acc(std::max(order, 0));
    s[0] = -subtrahend[0];
    if (s[0] != 0) {
        throw Error(ErrorCode::NonzeroConstantTerm, "fixed point would have a constant term");
    }
    for (int n = 1; n <= order; ++n) {
        BigRational c = -subtrahend[n];
        for (int j = 1; j <= n; ++j) {
            const auto p = prefactor[j];
            if (p != 0) c += p * acc[n - j];
        }
        s[n] = c;
        acc.advance(s, n);
    }
    return RationalSeries(order, std::move(s));
}

namespace {

void require_order(int order) {
    if (order < 1) throw Error(ErrorCode::InvalidArgument, "truncation order must be at least 1");
}

}  // namespace

RationalSeries series_rooted(int order) {
    require_order(order);
    return checked_counting(
        solve_mset_fixed_point(RationalSeries::monomial(order, 1), RationalSeries(order), order),
        "series_rooted");
}

RationalSeries series_weighted_rooted(int order) {
    require_order(order);
    return checked_counting(
        solve_mset_fixed_point(RationalSeries::geometric_tail(order), RationalSeries(order), order),
        "series_weighted_rooted");
}

RationalSeries series_avoid_limb_rooted(int limb_size, int order) {
    require_order(order);
    if (limb_size < 2) {
        throw Error(ErrorCode::BadLimbSize, "a limb has at least 2 vertices, got " + std::to_string(limb_size));
    }
    const auto prefactor = RationalSeries::monomial(order, 1) - RationalSeries::monomial(order, limb_size);
    return checked_counting(solve_mset_fixed_point(prefactor, RationalSeries(order), order),
                            "series_avoid_limb_rooted");
}

RationalSeries series_avoid_limb_weighted(int limb_weight, int order) {
    require_order(order);
    if (limb_weight < 3) {
        throw Error(ErrorCode::BadLimbSize,
                    "weighted limb weight must be at least 3, got " + std::to_string(limb_weight));
    }
    const auto prefactor =
        RationalSeries::geometric_tail(order) - RationalSeries::monomial(order, limb_weight);
    return checked_counting(solve_mset_fixed_point(prefactor, RationalSeries(order), order),
                            "series_avoid_limb_weighted");
}

RationalSeries series_avoid_maximal_limb(int limb_size, int order) {
    require_order(order);
    if (limb_size < 1) {
        throw Error(ErrorCode::BadLimbSize, "maximal limb needs at least 1 vertex");
    }
    return checked_counting(solve_mset_fixed_point(RationalSeries::monomial(order, 1),
                                                   RationalSeries::monomial(order, limb_size), order),
                            "series_avoid_maximal_limb");
}

RationalSeries unroot(const RationalSeries& rooted) {
    return rooted + BigRational(1, 2) * (rooted.substitute_power(2) - rooted * rooted);
}

RationalSeries series_weighted_free(int order) {
    return checked_counting(unroot(series_weighted_rooted(order)), "series_weighted_free");
}

RationalSeries series_avoid_limb_weighted_free(int limb_weight, int order) {
    return checked_counting(unroot(series_avoid_limb_weighted(limb_weight, order)),
                            "series_avoid_limb_weighted_free");
}

RationalSeries series_dominating_bound(int order) {
    require_order(order);
    std::vector<BigRational> f(static_cast<std::size_t>(order) + 1);
    f[1] = 1;
    for (int n = 1; n + 1 <= order; ++n) {
        BigRational acc = 0;
        for (int i = 1; i <= n; ++i) acc += f[i] * f[n - i + 1];
        f[n + 1] = 2 * acc;
    }
    return RationalSeries(order, std::move(f));
}

const char* to_string(RadiusMethod method) noexcept {
    switch (method) {
        case RadiusMethod::ratio: return "ratio";
        case RadiusMethod::solve_unit: return "solve_unit";
    }
    return "unknown";
}

long double evaluate(const RationalSeries& s, long double x) {
    long double acc = 0.0L;
    for (int n = s.order(); n >= 0; --n) {
        acc = acc * x + s.coefficients()[n].convert_to<long double>();
    }
    return acc;
}

RadiusEstimate estimate_radius(const RationalSeries& s, RadiusMethod method,
                               std::optional<int> unit_shift_power) {
    const int n = s.order();
    bool any_positive = false;
    for (int i = 1; i <= n; ++i) {
        if (s[i] < 0) throw Error(ErrorCode::NonPositive, "negative coefficient at " + std::to_string(i));
        if (s[i] > 0) any_positive = true;
    }
    if (!any_positive) throw Error(ErrorCode::NonPositive, "series has no positive coefficient");

    RadiusEstimate est{0.0, method, n};
    if (method == RadiusMethod::ratio) {
        if (n < 2 || s[n] <= 0 || s[n - 1] <= 0) {
            throw Error(ErrorCode::NonPositive, "ratio estimate needs positive c_{N-1} and c_N");
        }
        est.value = static_cast<double>((s[n - 1] / s[n]).convert_to<long double>());
        return est;
    }

    const auto gap = [&](long double x) {
        long double v = evaluate(s, x) - 1.0L;
        if (unit_shift_power) {
            long double p = 1.0L;
            for (int i = 0; i < *unit_shift_power; ++i) p *= x;
            v += p;
        }
        return v;
    };
    long double lo = 0.0L;
    long double hi = 1.0L;
    if (!(gap(lo) < 0.0L) || !(gap(hi) > 0.0L)) {
        throw Error(ErrorCode::NoRoot, "target value is not bracketed by (0, 1)");
    }
    for (int iter = 0; iter < 200 && hi - lo > 0.0L; ++iter) {
        const long double mid = (lo + hi) / 2.0L;
        if (gap(mid) < 0.0L) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    est.value = static_cast<double>((lo + hi) / 2.0L);
    return est;
}

}  // namespace limbforge
