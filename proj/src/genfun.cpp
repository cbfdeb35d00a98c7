#include "planepart/genfun.hpp"

#include <cassert>
#include <chrono>
#include <stdexcept>

#include "planepart/components.hpp"
#include "planepart/errors.hpp"

namespace planepart {

BinomialProduct f_factor(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("f(n,m) needs n, m >= 0");
    BinomialProduct p;
    for (int i = 0; i < n; ++i) {
        p *= BinomialProduct::factor(i, m + 1);
        p *= BinomialProduct::factor(i + 1, m, -1);
    }
    return p;
}

BinomialProduct local_factor(const PlanePartition& pp, int i, int j) {
    if (!pp.in_support(i, j))
        throw OutOfSupport("box (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is outside the support");
    const Partition lambda = pp.diagonal_from(i, j);
    const Partition mu = pp.diagonal_from(i + 1, j);
    const Partition nu = pp.diagonal_from(i, j + 1);
    const int l1 = lambda.part(1);

    BinomialProduct result;
    // All four arguments coincide once m reaches the length of lambda; the
    // final pass only asserts that the next term is 1.
    for (int m = 0; m <= lambda.length(); ++m) {
        BinomialProduct term = f_factor(l1 - mu.part(m + 1), m);
        term *= f_factor(l1 - nu.part(m + 1), m);
        term *= f_factor(l1 - lambda.part(m + 1), m).inverse();
        term *= f_factor(l1 - lambda.part(m + 2), m).inverse();
        if (m == lambda.length()) {
            assert(term.is_one());
            break;
        }
        result *= term;
    }
    return result;
}

BinomialProduct f_pi(const PlanePartition& pp) {
    BinomialProduct result;
    for (int i = 1; i <= pp.row_count(); ++i)
        for (int j = 1; pp.in_support(i, j); ++j) result *= local_factor(pp, i, j);
    return result;
}

BinomialProduct f_lambda_ordinary(const Partition& lambda) {
    BinomialProduct result;
    for (int i = 1; i <= lambda.length(); ++i)
        result *= f_factor(lambda.part(i) - lambda.part(i + 1), 0);
    return result;
}

TruncatedSeries<QtSeries> pochhammer_ratio(int k, int smax, int qtmax) {
    if (k < 1) throw std::invalid_argument("pochhammer_ratio needs k >= 1");
    if (smax < 0 || qtmax < 0) throw std::invalid_argument("truncations must be >= 0");
    auto series = TruncatedSeries<QtSeries>::one(smax, QtSeries::one_truncated(qtmax));
    if (k > smax) return series;
    // Factors with n beyond qtmax are 1 within the (q,t) truncation.
    for (int n = 0; n <= qtmax; ++n) {
        QtSeries minus_tqn = QtSeries::zero_truncated(qtmax) -
                             QtSeries::monomial(n, 1);
        series.mul_one_plus_monomial(k, minus_tqn);       // (1 - t q^n s^k)
        QtSeries qn = QtSeries::zero_truncated(qtmax) + QtSeries::monomial(n, 0);
        series.div_one_minus_monomial(k, qn);             // 1 / (1 - q^n s^k)
    }
    return series;
}

TruncatedSeries<Polynomial> lhs_theorem_b(int rows, int cols, int smax,
                                          const EnumerationLimits& limits) {
    TruncatedSeries<Polynomial> series(smax);
    for (const PlanePartition& pp : enumerate_pp(rows, cols, smax, limits))
        series.add_term(static_cast<int>(pp.weight()), a_poly(pp));
    return series;
}

TruncatedSeries<Polynomial> rhs_theorem_b(int rows, int cols, int smax) {
    auto series = TruncatedSeries<Polynomial>::one(smax);
    const Polynomial minus_t = -Polynomial::monomial(1);
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            const int k = i + j - 1;
            if (k > smax) continue;
            series.mul_one_plus_monomial(k, minus_t);    // (1 - t s^k)
            series.div_one_minus_monomial(k, Polynomial(1));  // 1 / (1 - s^k)
        }
    }
    return series;
}

TruncatedSeries<QtSeries> lhs_theorem_a(int rows, int cols, int smax, int qtmax,
                                        const EnumerationLimits& limits) {
    auto series = TruncatedSeries<QtSeries>(smax);
    for (const PlanePartition& pp : enumerate_pp(rows, cols, smax, limits))
        series.add_term(static_cast<int>(pp.weight()), f_pi(pp).expand(qtmax));
    return series;
}

TruncatedSeries<QtSeries> rhs_theorem_a(int rows, int cols, int smax, int qtmax) {
    auto series = TruncatedSeries<QtSeries>::one(smax, QtSeries::one_truncated(qtmax));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) series *= pochhammer_ratio(i + j - 1, smax, qtmax);
    return series;
}

TruncatedSeries<Polynomial> lhs_shifted_macmahon(int rows, int cols, int smax,
                                                 const EnumerationLimits& limits) {
    TruncatedSeries<Polynomial> series(smax);
    for (const PlanePartition& pp : enumerate_spp(rows, cols, smax, limits)) {
        const ComponentAnalysis analysis = analyze(pp);
        BigInt two_k = BigInt(1) << analysis.k;
        series.add_term(static_cast<int>(pp.weight()),
                        Polynomial::monomial(static_cast<int>(pp.trace()), two_k));
    }
    return series;
}

TruncatedSeries<Polynomial> rhs_shifted_macmahon(int rows, int cols, int smax) {
    auto series = TruncatedSeries<Polynomial>::one(smax);
    const Polynomial x = Polynomial::monomial(1);
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            const int k = i + j - 1;
            if (k > smax) continue;
            series.mul_one_plus_monomial(k, x);   // (1 + x s^k)
            series.div_one_minus_monomial(k, x);  // 1 / (1 - x s^k)
        }
    }
    return series;
}

namespace {

template <typename R, typename Render>
void compare_series(const TruncatedSeries<R>& lhs, const TruncatedSeries<R>& rhs,
                    Render render, VerificationReport& report) {
    assert(lhs.trunc() == rhs.trunc());
    for (int d = 0; d <= lhs.trunc(); ++d) {
        DegreeStatus status;
        status.degree = d;
        status.match = lhs.coeff(d) == rhs.coeff(d);
        if (!status.match) {
            status.lhs = render(lhs.coeff(d));
            status.rhs = render(rhs.coeff(d));
        }
        report.degrees.push_back(std::move(status));
    }
}

void merge_comparison(VerificationReport& into, const VerificationReport& from) {
    assert(into.degrees.size() == from.degrees.size());
    for (std::size_t d = 0; d < into.degrees.size(); ++d) {
        if (from.degrees[d].match) continue;
        auto& status = into.degrees[d];
        if (status.match) {
            status = from.degrees[d];
        } else {
            status.lhs += " | " + from.degrees[d].lhs;
            status.rhs += " | " + from.degrees[d].rhs;
        }
    }
}

std::string render_tpoly(const Polynomial& p) { return p.to_string("t"); }
std::string render_xpoly(const Polynomial& p) { return p.to_string("x"); }
std::string render_qt(const QtSeries& s) { return s.to_string(); }

}  // namespace

VerificationReport verify(const std::string& identity, int rows, int cols, int smax,
                          std::optional<int> qtmax, const EnumerationLimits& limits) {
    VerificationReport report;
    report.identity = identity;
    report.rows = rows;
    report.cols = cols;
    report.smax = smax;
    report.qtmax = qtmax;
    if (smax > limits.max_weight_cap)
        throw CapExceeded("requested smax " + std::to_string(smax) +
                          " exceeds the configured weight cap of " +
                          std::to_string(limits.max_weight_cap));
    const auto start = std::chrono::steady_clock::now();

    if (identity == "theorem-b") {
        compare_series(lhs_theorem_b(rows, cols, smax, limits), rhs_theorem_b(rows, cols, smax),
                       render_tpoly, report);
    } else if (identity == "theorem-a") {
        const int m = qtmax.value_or(4);
        report.qtmax = m;
        compare_series(lhs_theorem_a(rows, cols, smax, m, limits),
                       rhs_theorem_a(rows, cols, smax, m), render_qt, report);
    } else if (identity == "shifted-macmahon") {
        compare_series(lhs_shifted_macmahon(rows, cols, smax, limits),
                       rhs_shifted_macmahon(rows, cols, smax), render_xpoly, report);
    } else if (identity == "hl-q0-consistency") {
        const int m = qtmax.value_or(4);
        report.qtmax = m;
        // The q=0 slice of each Macdonald-case side must match the
        // Hall-Littlewood series through t-degree m.
        auto slice = [m](const TruncatedSeries<QtSeries>& src) {
            TruncatedSeries<Polynomial> out(src.trunc());
            for (int d = 0; d <= src.trunc(); ++d) out.coeff(d) = src.coeff(d).q0_slice();
            return out;
        };
        auto truncate_t = [m](TruncatedSeries<Polynomial> src) {
            for (int d = 0; d <= src.trunc(); ++d) src.coeff(d) = src.coeff(d).truncated(m);
            return src;
        };
        const auto hl_lhs = truncate_t(lhs_theorem_b(rows, cols, smax, limits));
        const auto hl_rhs = truncate_t(rhs_theorem_b(rows, cols, smax));
        compare_series(slice(lhs_theorem_a(rows, cols, smax, m, limits)), hl_lhs, render_tpoly,
                       report);
        VerificationReport product_side = report;
        product_side.degrees.clear();
        compare_series(slice(rhs_theorem_a(rows, cols, smax, m)), hl_rhs, render_tpoly,
                       product_side);
        merge_comparison(report, product_side);
    } else if (identity == "corollary-2.1") {
        const int m = qtmax.value_or(4);
        report.qtmax = m;
        TruncatedSeries<QtSeries> lhs(smax);
        for (const Partition& lambda : enumerate_partitions(rows, smax))
            lhs.add_term(static_cast<int>(lambda.weight()), f_lambda_ordinary(lambda).expand(m));
        auto rhs = TruncatedSeries<QtSeries>::one(smax, QtSeries::one_truncated(m));
        for (int i = 1; i <= rows; ++i) rhs *= pochhammer_ratio(i, smax, m);
        compare_series(lhs, rhs, render_qt, report);
    } else if (identity == "corollary-2.5") {
        TruncatedSeries<Polynomial> lhs(smax);
        const Polynomial one_minus_t = Polynomial::one_minus_power(1);
        for (const Partition& lambda : enumerate_partitions(rows, smax)) {
            int distinct = 0;
            for (int i = 1; i <= lambda.length(); ++i)
                if (lambda.part(i) != lambda.part(i + 1)) ++distinct;
            lhs.add_term(static_cast<int>(lambda.weight()), one_minus_t.pow(distinct));
        }
        compare_series(lhs, rhs_theorem_b(rows, 1, smax), render_tpoly, report);
    } else {
        throw std::invalid_argument("unknown identity: " + identity);
    }

    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace planepart
