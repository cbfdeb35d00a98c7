#include "planepart/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace planepart {

namespace {
const BigInt kZero(0);
}

Polynomial Polynomial::monomial(int degree, BigInt coeff) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (coeff == 0) return Polynomial();
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::one_minus_power(int degree) {
    Polynomial p = monomial(degree, BigInt(-1));
    p += Polynomial(1);
    return p;
}

const BigInt& Polynomial::coeff(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[degree];
}

BigInt Polynomial::eval(const BigInt& value) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

Polynomial Polynomial::truncated(int max_degree) const {
    if (max_degree < 0) return Polynomial();
    if (degree() <= max_degree) return *this;
    std::vector<BigInt> c(coeffs_.begin(), coeffs_.begin() + max_degree + 1);
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::pow(long long exponent) const {
    if (exponent < 0) throw std::invalid_argument("polynomial pow: negative exponent");
    Polynomial acc(1), base = *this;
    while (exponent > 0) {
        if (exponent & 1) acc *= base;
        base = base * base;
        exponent >>= 1;
    }
    return acc;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        const BigInt& c = coeffs_[d];
        if (c == 0) continue;
        BigInt abs = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0) {
            out << abs.str();
        } else {
            if (abs != 1) out << abs.str() << "*";
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

}  // namespace planepart
