#pragma once

#include <map>
#include <string>
#include <utility>

#include "planepart/bigint.hpp"
#include "planepart/polynomial.hpp"

namespace planepart {

// Exact bivariate series in q and t, truncated by total degree
// (deg_q + deg_t <= trunc). A negative trunc means "exact": the element is a
// finite polynomial known in full (constants, small binomials). Arithmetic
// propagates the tighter truncation, so a trunc-M element never pretends to
// know coefficients beyond M.
class QtSeries {
public:
    static constexpr int kExact = -1;

    QtSeries() = default;
    QtSeries(int constant) { if (constant != 0) terms_[{0, 0}] = constant; }
    QtSeries(BigInt constant) { if (constant != 0) terms_[{0, 0}] = std::move(constant); }

    static QtSeries monomial(int q_deg, int t_deg, BigInt coeff = BigInt(1));
    static QtSeries zero_truncated(int trunc);
    static QtSeries one_truncated(int trunc);

    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const BigInt& coeff(int q_deg, int t_deg) const;
    const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }

    QtSeries& operator+=(const QtSeries& other);
    QtSeries& operator-=(const QtSeries& other);
    QtSeries operator*(const QtSeries& other) const;
    QtSeries operator+(const QtSeries& other) const { QtSeries r = *this; r += other; return r; }
    QtSeries operator-(const QtSeries& other) const { QtSeries r = *this; r -= other; return r; }
    QtSeries& operator*=(const QtSeries& other) { *this = *this * other; return *this; }

    // Equality compares stored terms only; callers compare values computed at
    // the same truncation.
    bool operator==(const QtSeries& other) const { return terms_ == other.terms_; }

    // Coefficients of q^0, as a polynomial in t.
    Polynomial q0_slice() const;

    std::string to_string() const;

private:
    static int combine(int a, int b) {
        if (a == kExact) return b;
        if (b == kExact) return a;
        return a < b ? a : b;
    }
    void prune();

    int trunc_ = kExact;
    std::map<std::pair<int, int>, BigInt> terms_;  // (q_deg, t_deg) -> coeff, nonzero only
};

}  // namespace planepart
