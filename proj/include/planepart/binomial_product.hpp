#pragma once

#include <map>
#include <string>
#include <utility>

#include "planepart/polynomial.hpp"
#include "planepart/qt_series.hpp"

namespace planepart {

// Formal product prod (1 - q^a t^b)^e with integer exponents e != 0 and
// (a,b) != (0,0). Multiplication adds exponent maps; cancelled factors are
// dropped eagerly, so the representation is canonical.
class BinomialProduct {
public:
    BinomialProduct() = default;

    // Single factor (1 - q^a t^b)^e.
    static BinomialProduct factor(int a, int b, long long e = 1);

    bool is_one() const { return exponents_.empty(); }
    const std::map<std::pair<int, int>, long long>& exponents() const { return exponents_; }

    BinomialProduct& operator*=(const BinomialProduct& other);
    BinomialProduct operator*(const BinomialProduct& other) const {
        BinomialProduct r = *this;
        r *= other;
        return r;
    }
    BinomialProduct inverse() const;
    bool operator==(const BinomialProduct& other) const = default;

    // q=0 specialization. Factors with a >= 1 become 1; the remaining
    // (1 - t^b)^e must all have e >= 0, otherwise NotPolynomialAtQ0.
    Polynomial eval_q0() const;

    // Exact expansion as a (q,t) series truncated at total degree M; negative
    // exponents expand through the geometric series of the binomial inverse.
    QtSeries expand(int max_total_degree) const;

    // Canonical text form, factors sorted by (a,b): "(1-t)^1 (1-q)^-1".
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, long long> exponents_;
};

}  // namespace planepart
