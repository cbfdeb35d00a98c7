#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planepart/binomial_product.hpp"
#include "planepart/enumerate.hpp"
#include "planepart/partition.hpp"
#include "planepart/plane_partition.hpp"
#include "planepart/polynomial.hpp"
#include "planepart/series.hpp"

namespace planepart {

// f(n,m) = prod_{i=0}^{n-1} (1 - q^i t^{m+1}) / (1 - q^{i+1} t^m), f(0,m) = 1.
BinomialProduct f_factor(int n, int m);

// Local factor F_pi(i,j) from the three diagonals rooted at the box:
// lambda down from (i,j), mu from (i+1,j), nu from (i,j+1). Missing parts
// read as 0. Throws OutOfSupport for boxes outside the support.
BinomialProduct local_factor(const PlanePartition& pp, int i, int j);

// F_pi(q,t) = product of local factors over all support boxes.
BinomialProduct f_pi(const PlanePartition& pp);

// F_lambda = prod_i f(d_i, 0) with d_i = lambda_i - lambda_{i+1}; equals f_pi
// of the one-column plane partition with column entries lambda.
BinomialProduct f_lambda_ordinary(const Partition& lambda);

// (t s^k; q)_inf / (s^k; q)_inf truncated to s-degree N and (q,t) total
// degree M. The coefficient of s^{kd} is the truncation of f(d,0).
TruncatedSeries<QtSeries> pochhammer_ratio(int k, int smax, int qtmax);

// Sum and product sides of the boxed identities. Coefficient rings:
// Polynomial in t for the Hall-Littlewood case, truncated (q,t) series for
// the Macdonald case, Polynomial in x for the strict/trace case.
TruncatedSeries<Polynomial> lhs_theorem_b(int rows, int cols, int smax,
                                          const EnumerationLimits& limits = {});
TruncatedSeries<Polynomial> rhs_theorem_b(int rows, int cols, int smax);

TruncatedSeries<QtSeries> lhs_theorem_a(int rows, int cols, int smax, int qtmax,
                                        const EnumerationLimits& limits = {});
TruncatedSeries<QtSeries> rhs_theorem_a(int rows, int cols, int smax, int qtmax);

TruncatedSeries<Polynomial> lhs_shifted_macmahon(int rows, int cols, int smax,
                                                 const EnumerationLimits& limits = {});
TruncatedSeries<Polynomial> rhs_shifted_macmahon(int rows, int cols, int smax);

struct DegreeStatus {
    int degree = 0;
    bool match = false;
    std::string lhs;  // rendered coefficients, filled on mismatch
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    int rows = 0;
    int cols = 0;
    int smax = 0;
    std::optional<int> qtmax;
    std::vector<DegreeStatus> degrees;
    double duration_ms = 0.0;  // informational; excluded from determinism

    bool ok() const {
        for (const auto& d : degrees)
            if (!d.match) return false;
        return true;
    }
};

inline const std::vector<std::string>& verify_identities() {
    static const std::vector<std::string> kIdentities = {
        "theorem-a", "theorem-b", "shifted-macmahon",
        "hl-q0-consistency", "corollary-2.1", "corollary-2.5"};
    return kIdentities;
}

// Compares the two sides of the named identity degree by degree. Mismatches
// are reported, never thrown; cap violations propagate as CapExceeded.
VerificationReport verify(const std::string& identity, int rows, int cols, int smax,
                          std::optional<int> qtmax = std::nullopt,
                          const EnumerationLimits& limits = {});

}  // namespace planepart
