#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

namespace planepart {

// Exact power series in one principal variable s, truncated at degree N, with
// coefficients in a pluggable exact ring R (BigInt, Polynomial, QtSeries).
// R needs +, -, *, ==, and a default constructor giving the additive identity.
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int trunc) : coeffs_(trunc + 1) {
        if (trunc < 0) throw std::invalid_argument("series truncation must be >= 0");
    }

    static TruncatedSeries one(int trunc, R unit = R(1)) {
        TruncatedSeries s(trunc);
        s.coeffs_[0] = std::move(unit);
        return s;
    }

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R& coeff(int degree) const { return coeffs_.at(degree); }
    R& coeff(int degree) { return coeffs_.at(degree); }

    void add_term(int degree, const R& value) {
        if (degree > trunc()) return;
        coeffs_[degree] = coeffs_[degree] + value;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other) {
        assert(trunc() == other.trunc());
        for (int d = 0; d <= trunc(); ++d) coeffs_[d] = coeffs_[d] + other.coeffs_[d];
        return *this;
    }

    TruncatedSeries operator*(const TruncatedSeries& other) const {
        assert(trunc() == other.trunc());
        TruncatedSeries out(trunc());
        for (int i = 0; i <= trunc(); ++i)
            for (int j = 0; i + j <= trunc(); ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + coeffs_[i] * other.coeffs_[j];
        return out;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& other) {
        *this = *this * other;
        return *this;
    }

    bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

    // In-place multiply by (1 + c * s^k).
    void mul_one_plus_monomial(int k, const R& c) {
        if (k <= 0) throw std::invalid_argument("monomial degree must be >= 1");
        for (int d = trunc(); d >= k; --d) coeffs_[d] = coeffs_[d] + c * coeffs_[d - k];
    }

    // In-place divide by (1 - c * s^k), i.e. multiply by the geometric series.
    void div_one_minus_monomial(int k, const R& c) {
        if (k <= 0) throw std::invalid_argument("monomial degree must be >= 1");
        for (int d = k; d <= trunc(); ++d) coeffs_[d] = coeffs_[d] + c * coeffs_[d - k];
    }

private:
    std::vector<R> coeffs_;
};

}  // namespace planepart
