#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "planepart/bijections.hpp"
#include "planepart/components.hpp"
#include "planepart/enumerate.hpp"
#include "planepart/errors.hpp"
#include "planepart/genfun.hpp"
#include "test_support.hpp"

using namespace planepart;
using planepart::test::pp;
using planepart::test::sample_pi;

namespace {

ShiftedTableau st(std::vector<std::vector<int>> rows) { return ShiftedTableau(std::move(rows)); }

MarkedValue parse_mv(const std::string& s) {
    const bool m = s.back() == '\'';
    return {std::stoi(m ? s.substr(0, s.size() - 1) : s), m};
}

MarkedShiftedTableau mt(std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<MarkedValue>> out;
    for (auto& row : rows) {
        out.emplace_back();
        for (auto& s : row) out.back().push_back(parse_mv(s));
    }
    return MarkedShiftedTableau(std::move(out));
}

MarkedMatrix mm(std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<MarkedValue>> out;
    for (auto& row : rows) {
        out.emplace_back();
        for (auto& s : row) out.back().push_back(s == "0" ? MarkedValue{} : parse_mv(s));
    }
    return MarkedMatrix(std::move(out));
}

// The worked matrix fixture and its expected encoding and tableaux.
MarkedMatrix sample_matrix() { return mm({{"1'", "0", "2"}, {"2", "1", "2'"}, {"1'", "1'", "0"}}); }

void check_knuth_statistics(const MarkedMatrix& a, const MarkedShiftedTableau& s,
                            const MarkedShiftedTableau& t) {
    REQUIRE(s.shape() == t.shape());
    CHECK(t.diagonal_unmarked());

    std::map<int, long long> col_sums, row_sums;
    long long total = 0, weighted_j = 0, weighted_i = 0;
    for (int i = 1; i <= a.row_count(); ++i) {
        for (int j = 1; j <= a.col_count(); ++j) {
            const int m = a.at(i, j).magnitude;
            col_sums[j] += m;
            row_sums[i] += m;
            total += m;
            weighted_j += static_cast<long long>(j) * m;
            weighted_i += static_cast<long long>(i) * m;
        }
    }
    std::map<int, long long> s_content, t_content;
    for (const auto& row : s.rows())
        for (const MarkedValue& v : row) ++s_content[v.magnitude];
    for (const auto& row : t.rows())
        for (const MarkedValue& v : row) ++t_content[v.magnitude];

    for (const auto& [j, n] : col_sums)
        CHECK(s_content[j] == n);
    for (const auto& [i, n] : row_sums)
        CHECK(t_content[i] == n);
    CHECK(s.cell_count() == total);
    CHECK(s.magnitude_sum() == weighted_j);
    CHECK(t.magnitude_sum() == weighted_i);
}

// Creation-order shape the reversal relies on: within one recorded value,
// primed cells (ascending rows) precede unprimed cells (ascending columns).
void check_creation_order(const std::vector<InsertionRecord>& log) {
    for (std::size_t i = 0; i + 1 < log.size(); ++i) {
        const auto& a = log[i];
        const auto& b = log[i + 1];
        if (a.recorded != b.recorded) continue;
        if (a.primed && b.primed) CHECK(a.cell.first < b.cell.first);
        if (!a.primed && !b.primed) CHECK(a.cell.second < b.cell.second);
        CHECK_FALSE((!a.primed && b.primed));
    }
}

void check_roundtrip(const MarkedMatrix& a) {
    std::vector<InsertionRecord> log;
    const auto [s, t] = knuth_forward(a, &log);
    check_knuth_statistics(a, s, t);
    check_creation_order(log);
    const MarkedMatrix back = knuth_backward(s, t, a.row_count(), a.col_count());
    CHECK(back == a);
}

MarkedMatrix random_matrix(std::mt19937& rng, int rows, int cols, int max_mag) {
    MarkedMatrix a(rows, cols);
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            const int pick = static_cast<int>(rng() % (2 * max_mag + 1));
            if (pick > 0) a.set(i, j, {(pick + 1) / 2, pick % 2 == 0});
        }
    }
    return a;
}

}  // namespace

TEST_CASE("marked value order") {
    CHECK(unmarked(1) < marked(1));
    CHECK(marked(1) < unmarked(2));
    CHECK(unmarked(2) < marked(2));
    CHECK(parse_mv("3'") == marked(3));
}

TEST_CASE("shifted tableau validation") {
    CHECK_NOTHROW(st({{2, 1}}));
    CHECK_NOTHROW(st({{2, 2}, {1}}));
    // equal values on the main diagonal have no valid marking; rejected
    CHECK_THROWS_AS(st({{1, 1}, {1}}), std::invalid_argument);
    // constant 2x2 square
    CHECK_THROWS_AS(st({{2, 2, 2}, {2, 2}}), std::invalid_argument);
    // non-strict shape
    CHECK_THROWS_AS(st({{2, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("marked tableau validation") {
    CHECK_NOTHROW(mt({{"1'", "1"}}));
    CHECK_THROWS_AS(mt({{"1'", "1'"}}), std::invalid_argument);  // marked twice in row
    CHECK_THROWS_AS(mt({{"1", "1"}, {"1"}}), std::invalid_argument);
    CHECK_NOTHROW(mt({{"3", "3", "2'", "2", "2"}, {"2", "2", "1", "1"}, {"1"}}));
}

TEST_CASE("pi forward on the sample partition") {
    const auto [s, t] = pi_forward(sample_pi());
    CHECK(s == st({{5, 3, 2, 1, 1}, {3, 2, 1}, {1, 1}}));
    CHECK(t == st({{4, 4, 3, 2, 1}, {3, 3, 2}, {2, 1}}));
    CHECK(s.entry_sum() == 20);
    CHECK(t.entry_sum() == 25);
    CHECK(s.cell_count() == 10);
    CHECK(s.k() == 4);
    CHECK(t.k() == 6);
    CHECK(s.row_count() == 3);
    CHECK(s.k() + t.k() - s.row_count() == 7);
}

TEST_CASE("pi forward edge cases") {
    const auto [s, t] = pi_forward(PlanePartition());
    CHECK(s.empty());
    CHECK(t.empty());
    CHECK_THROWS_AS(pi_forward(pp({{1, 1}, {1, 1}})), std::invalid_argument);

    const auto [s1, t1] = pi_forward(pp({{1}}));
    CHECK(s1 == st({{1}}));
    CHECK(t1 == st({{1}}));
}

TEST_CASE("pi backward") {
    CHECK(pi_backward(st({{5, 3, 2, 1, 1}, {3, 2, 1}, {1, 1}}),
                      st({{4, 4, 3, 2, 1}, {3, 3, 2}, {2, 1}})) == sample_pi());
    CHECK(pi_backward(ShiftedTableau(), ShiftedTableau()).empty());
    CHECK(pi_backward(st({{1}}), st({{1}})) == pp({{1}}));
    CHECK_THROWS_AS(pi_backward(st({{1}}), ShiftedTableau()), InvalidPair);
    // q-side must be strictly decreasing per diagonal once assembled:
    // shape mismatch in slices
    CHECK_THROWS_AS(pi_backward(st({{2, 1}}), st({{1, 1}})), InvalidPair);
}

TEST_CASE("pi roundtrip with statistics") {
    for (const PlanePartition& p : enumerate_spp(4, 4, 10)) {
        const auto [s, t] = pi_forward(p);
        CHECK(s.shape() == t.shape());
        CHECK(pi_backward(s, t) == p);
        CHECK(p.weight() == s.entry_sum() + t.entry_sum() - s.cell_count());
        CHECK(p.trace() == s.cell_count());
        const int ell = s.row_count();
        CHECK(analyze(p).k == s.k() + t.k() - ell);
        // tableau component counts match the two rhombus counts
        const auto rc = k_via_rhombi(p);
        CHECK(s.k() == rc.b);
        CHECK(t.k() == rc.g);
    }
}

TEST_CASE("marking enumeration fixtures") {
    const auto single_free = enumerate_markings(st({{3}}), false);
    REQUIRE(single_free.size() == 2);
    CHECK(single_free[0] == mt({{"3"}}));
    CHECK(single_free[1] == mt({{"3'"}}));

    const auto single_forbid = enumerate_markings(st({{3}}), true);
    REQUIRE(single_forbid.size() == 1);
    CHECK(single_forbid[0] == mt({{"3"}}));

    const auto remark_s = st({{3, 3, 3, 3, 1}, {2, 2, 1, 1}, {1}});
    CHECK(remark_s.k() == 4);
    CHECK(enumerate_markings(remark_s, false).size() == 16);
}

TEST_CASE("markings unmark back to the base tableau") {
    const auto base = st({{3, 3, 3, 3, 1}, {2, 2, 1, 1}, {1}});
    for (const auto& m : enumerate_markings(base, false)) CHECK(m.unmark() == base);

    // forbidding diagonal marks forces components that touch the diagonal
    int touching = 0;
    for (const auto& comp : base.component_cells()) {
        bool touches = false;
        for (const auto& [r, c] : comp) touches |= (r == c);
        touching += touches ? 1 : 0;
    }
    const auto forbidden = enumerate_markings(base, true);
    CHECK(forbidden.size() == (1u << (base.k() - touching)));
    for (const auto& m : forbidden) CHECK(m.diagonal_unmarked());
}

TEST_CASE("marking count is 2^k on random tableaux") {
    std::mt19937 rng(5);
    const auto pool = enumerate_spp(4, 4, 10);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [s, t] = pi_forward(pool[rng() % pool.size()]);
        CHECK(enumerate_markings(s, false).size() == (1u << s.k()));
        CHECK(enumerate_markings(t, false).size() == (1u << t.k()));
    }
}

TEST_CASE("bump and eqbump") {
    std::vector<MarkedValue> v{unmarked(3), unmarked(3), unmarked(1)};
    auto out = bump(v, unmarked(2));
    CHECK(v == std::vector<MarkedValue>{unmarked(3), unmarked(3), unmarked(2)});
    REQUIRE(out.bumped.has_value());
    CHECK(*out.bumped == unmarked(1));
    CHECK(out.position == 2);

    std::vector<MarkedValue> w{unmarked(1)};
    out = bump(w, unmarked(1));
    CHECK(w == std::vector<MarkedValue>{unmarked(1), unmarked(1)});
    CHECK_FALSE(out.bumped.has_value());

    std::vector<MarkedValue> u{unmarked(1)};
    out = eqbump(u, unmarked(1));
    CHECK(u == std::vector<MarkedValue>{unmarked(1)});
    REQUIRE(out.bumped.has_value());
    CHECK(*out.bumped == unmarked(1));
}

TEST_CASE("two-line encoding") {
    const TwoLineArray e = knuth_encode(sample_matrix());
    CHECK(e.top == std::vector<int>{3, 3, 2, 2, 2, 2, 2, 1, 1, 1});
    const std::vector<std::string> expected{"2'", "1'", "3'", "3", "2", "1", "1", "3", "3", "1'"};
    REQUIRE(e.bottom.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(e.bottom[i] == parse_mv(expected[i]));

    CHECK(knuth_encode(MarkedMatrix(2, 2)).top.empty());

    const TwoLineArray single = knuth_encode(mm({{"2"}}));
    CHECK(single.top == std::vector<int>{1, 1});
    CHECK(single.bottom == std::vector<MarkedValue>{unmarked(1), unmarked(1)});
}

TEST_CASE("knuth forward on the worked example") {
    const auto [s, t] = knuth_forward(sample_matrix());
    CHECK(s == mt({{"3'", "3", "3", "3", "1'"}, {"2'", "2", "1", "1"}, {"1'"}}));
    CHECK(t == mt({{"3", "3", "2'", "2", "2"}, {"2", "2", "1", "1"}, {"1"}}));
    check_knuth_statistics(sample_matrix(), s, t);
}

TEST_CASE("knuth trivial cases") {
    const auto [s, t] = knuth_forward(MarkedMatrix(3, 2));
    CHECK(s.empty());
    CHECK(t.empty());
    CHECK(knuth_backward(s, t, 3, 2) == MarkedMatrix(3, 2));

    check_roundtrip(mm({{"2"}}));
    check_roundtrip(mm({{"2'"}}));
    check_roundtrip(mm({{"1'"}, {"1'"}}));
}

TEST_CASE("knuth roundtrip exhaustive on 2x2 magnitude <= 2") {
    std::vector<MarkedValue> alphabet{{0, false}, {1, false}, {1, true}, {2, false}, {2, true}};
    long long count = 0;
    for (const auto& a11 : alphabet)
        for (const auto& a12 : alphabet)
            for (const auto& a21 : alphabet)
                for (const auto& a22 : alphabet) {
                    MarkedMatrix a(2, 2);
                    a.set(1, 1, a11);
                    a.set(1, 2, a12);
                    a.set(2, 1, a21);
                    a.set(2, 2, a22);
                    check_roundtrip(a);
                    ++count;
                }
    CHECK(count == 625);
}

TEST_CASE("knuth roundtrip random 3x3 magnitude <= 3") {
    std::mt19937 rng(20260811);
    for (int trial = 0; trial < 1000; ++trial)
        check_roundtrip(random_matrix(rng, 3, 3, 3));
}

TEST_CASE("knuth forward is injective on small matrices") {
    std::vector<MarkedValue> alphabet{{0, false}, {1, false}, {1, true}, {2, false}, {2, true}};
    std::set<std::string> images;
    long long count = 0;
    for (const auto& a11 : alphabet)
        for (const auto& a12 : alphabet)
            for (const auto& a21 : alphabet)
                for (const auto& a22 : alphabet) {
                    MarkedMatrix a(2, 2);
                    a.set(1, 1, a11);
                    a.set(1, 2, a12);
                    a.set(2, 1, a21);
                    a.set(2, 2, a22);
                    const auto [s, t] = knuth_forward(a);
                    images.insert(s.to_string() + "\n--\n" + t.to_string());
                    ++count;
                }
    CHECK(static_cast<long long>(images.size()) == count);
}

TEST_CASE("theorem 3.1 recount three ways") {
    const int rows = 2, cols = 2, smax = 6;
    const auto product = rhs_shifted_macmahon(rows, cols, smax);

    // (a) directly from component counts
    CHECK(lhs_shifted_macmahon(rows, cols, smax) == product);

    // (b) through the slicing correspondence and marking counts,
    // (c) through the shifted Knuth preimages of the marked pairs
    TruncatedSeries<Polynomial> via_markings(smax);
    TruncatedSeries<Polynomial> via_matrices(smax);
    std::set<std::string> seen_matrices;
    for (const PlanePartition& p : enumerate_spp(rows, cols, smax)) {
        const auto [s, t] = pi_forward(p);
        const auto s_markings = enumerate_markings(s, false);
        const auto t_markings = enumerate_markings(t, true);
        const int weight = static_cast<int>(p.weight());
        const int trace = static_cast<int>(p.trace());
        via_markings.add_term(
            weight, Polynomial::monomial(trace, BigInt(s_markings.size() * t_markings.size())));
        for (const auto& sm : s_markings) {
            for (const auto& tm : t_markings) {
                const MarkedMatrix a = knuth_backward(sm, tm, rows, cols);
                CHECK(a.row_count() <= rows);
                CHECK(a.col_count() <= cols);
                const auto [s2, t2] = knuth_forward(a);
                CHECK(s2 == sm);
                CHECK(t2 == tm);
                seen_matrices.insert(a.to_string());
                via_matrices.add_term(weight, Polynomial::monomial(trace, BigInt(1)));
            }
        }
    }
    CHECK(via_markings == product);
    CHECK(via_matrices == product);

    // the matrices obtained are pairwise distinct and exhaust the weight-
    // bounded part of M(2,2)
    long long expected = 0;
    for (int d = 0; d <= smax; ++d) {
        const Polynomial& c = product.coeff(d);
        for (int x = 0; x <= c.degree(); ++x) expected += static_cast<long long>(c.coeff(x));
    }
    CHECK(static_cast<long long>(seen_matrices.size()) == expected);
}
