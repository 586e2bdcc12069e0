#include "limbforge/polynomial.hpp"

#include <algorithm>

#include "limbforge/error.hpp"

namespace limbforge {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(long value) {
    if (value != 0) coeffs_.emplace_back(value);
}

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& coefficient) {
    if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    c[degree] = coefficient;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](int n) const {
    if (n < 0 || n > degree()) return 0;
    return coeffs_[n];
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<BigInt> c;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] * static_cast<long>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
    if (is_zero()) return {};
    if (degree() < divisor.degree()) throw Error(ErrorCode::Internal, "inexact polynomial division");
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> q(static_cast<std::size_t>(degree() - divisor.degree()) + 1);
    const auto& lc = divisor.coeffs_.back();
    const int dd = divisor.degree();
    for (int k = degree() - dd; k >= 0; --k) {
        const BigInt& top = rem[k + dd];
        if (top == 0) continue;
        if (top % lc != 0) throw Error(ErrorCode::Internal, "inexact polynomial division");
        const BigInt f = top / lc;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= f * divisor.coeffs_[j];
        q[k] = f;
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
        throw Error(ErrorCode::Internal, "inexact polynomial division");
    }
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += mag.str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace limbforge
