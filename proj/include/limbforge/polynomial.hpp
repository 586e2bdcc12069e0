#pragma once

#include <string>
#include <vector>

#include "limbforge/bigint.hpp"

namespace limbforge {

/// Dense univariate polynomial over the integers, coefficients low to high.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    /// Constant polynomial.
    IntPolynomial(long value);  // NOLINT(google-explicit-constructor)

    static IntPolynomial monomial(int degree, const BigInt& coefficient = 1);
    static IntPolynomial x() { return monomial(1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt operator[](int n) const;
    const BigInt& leading() const;

    IntPolynomial derivative() const;
    /// Exact quotient by `divisor`; throws `Internal` if the division leaves
    /// a remainder or needs non-integer coefficients.
    IntPolynomial exact_div(const IntPolynomial& divisor) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(IntPolynomial a);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// e.g. "x^3 - 2*x".
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace limbforge
