#pragma once

#include <string>
#include <vector>

#include "planepart/bigint.hpp"

namespace planepart {

// Dense univariate polynomial with exact integer coefficients. The variable
// has no baked-in name; printing takes it as a parameter, so the same type
// carries polynomials in t (Hall-Littlewood weights) and in x (trace series).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int constant) : coeffs_(constant == 0 ? 0 : 1, BigInt(constant)) {}
    Polynomial(BigInt constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(int degree, BigInt coeff = BigInt(1));
    // 1 - v^degree, the basic factor of the Hall-Littlewood weights.
    static Polynomial one_minus_power(int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int degree) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval(const BigInt& value) const;
    Polynomial truncated(int max_degree) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator+(const Polynomial& other) const { Polynomial r = *this; r += other; return r; }
    Polynomial operator-(const Polynomial& other) const { Polynomial r = *this; r -= other; return r; }
    Polynomial& operator*=(const Polynomial& other) { *this = *this * other; return *this; }
    Polynomial operator-() const;
    bool operator==(const Polynomial& other) const = default;

    Polynomial pow(long long exponent) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;  // coeffs_[d] is the coefficient of var^d
};

}  // namespace planepart
