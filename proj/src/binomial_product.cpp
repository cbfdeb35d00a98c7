#include "planepart/binomial_product.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "planepart/errors.hpp"

namespace planepart {

BinomialProduct BinomialProduct::factor(int a, int b, long long e) {
    if (a < 0 || b < 0) throw std::invalid_argument("binomial factor: negative exponent pair");
    if (a == 0 && b == 0) throw std::invalid_argument("binomial factor: (0,0) is not a factor");
    BinomialProduct p;
    if (e != 0) p.exponents_[{a, b}] = e;
    return p;
}

BinomialProduct& BinomialProduct::operator*=(const BinomialProduct& other) {
    for (const auto& [key, e] : other.exponents_) {
        auto [it, inserted] = exponents_.try_emplace(key, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) exponents_.erase(it);
        }
    }
    return *this;
}

BinomialProduct BinomialProduct::inverse() const {
    BinomialProduct r = *this;
    for (auto& [key, e] : r.exponents_) e = -e;
    return r;
}

Polynomial BinomialProduct::eval_q0() const {
    Polynomial result(1);
    for (const auto& [key, e] : exponents_) {
        if (key.first >= 1) continue;  // (1 - q^a t^b) -> 1 at q=0
        if (e < 0)
            throw NotPolynomialAtQ0("negative exponent on (1-t^" + std::to_string(key.second) +
                                    ") survives at q=0");
        result *= Polynomial::one_minus_power(key.second).pow(e);
    }
    return result;
}

QtSeries BinomialProduct::expand(int max_total_degree) const {
    if (max_total_degree < 0) throw std::invalid_argument("expand: negative truncation");
    QtSeries result = QtSeries::one_truncated(max_total_degree);
    for (const auto& [key, e] : exponents_) {
        const auto [a, b] = key;
        if (a + b > max_total_degree) continue;  // factor is 1 within the truncation
        if (e > 0) {
            QtSeries binom = QtSeries::one_truncated(max_total_degree) -
                             QtSeries::monomial(a, b);
            for (long long i = 0; i < e; ++i) result *= binom;
        } else {
            // 1/(1-q^a t^b) = sum_m (q^a t^b)^m, finite within the truncation.
            QtSeries geo = QtSeries::zero_truncated(max_total_degree);
            for (int m = 0; m * (a + b) <= max_total_degree; ++m)
                geo += QtSeries::monomial(a * m, b * m);
            for (long long i = 0; i < -e; ++i) result *= geo;
        }
    }
    return result;
}

std::string BinomialProduct::to_string() const {
    if (exponents_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, e] : exponents_) {
        if (!first) out << " ";
        first = false;
        out << "(1-";
        if (key.first > 0) {
            out << "q";
            if (key.first > 1) out << "^" << key.first;
        }
        if (key.second > 0) {
            if (key.first > 0) out << " ";
            out << "t";
            if (key.second > 1) out << "^" << key.second;
        }
        out << ")^" << e;
    }
    return out.str();
}

}  // namespace planepart
