#include <doctest.h>

#include "planepart/components.hpp"
#include "planepart/enumerate.hpp"
#include "test_support.hpp"

using namespace planepart;
using planepart::test::pp;
using planepart::test::sample_pi;

TEST_CASE("analyze fixtures") {
    SUBCASE("separated equal cells") {
        const auto a = analyze(pp({{2, 1}, {1}}));
        CHECK(a.k == 3);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2 - (i - 1); ++j) CHECK(a.level[i - 1][j - 1] == 1);
    }
    SUBCASE("single block of equal entries") {
        const auto a = analyze(pp({{1, 1}, {1, 1}}));
        CHECK(a.k == 1);
        CHECK(a.level[0][0] == 2);
        CHECK(a.level[0][1] == 1);
        CHECK(a.level[1][0] == 1);
        CHECK(a.level[1][1] == 1);
        REQUIRE(a.components.size() == 1);
        const auto& borders = a.components[0].border_components;
        REQUIRE(borders.size() == 2);
        CHECK(borders[0].level == 2);  // topmost-leftmost first
        CHECK(borders[0].cells == std::vector<Cell>{{1, 1}});
        CHECK(borders[1].level == 1);
        CHECK(borders[1].cells.size() == 3);
    }
    SUBCASE("single box") {
        const auto a = analyze(pp({{7}}));
        CHECK(a.k == 1);
        CHECK(a.level[0][0] == 1);
        CHECK(a.components[0].border_components.size() == 1);
    }
    SUBCASE("empty") {
        const auto a = analyze(PlanePartition());
        CHECK(a.k == 0);
        CHECK(a.a_polynomial() == Polynomial(1));
    }
}

TEST_CASE("analysis invariants on enumerated sets") {
    for (const PlanePartition& p : enumerate_pp(4, 4, 8)) {
        const auto a = analyze(p);
        long long border_cells = 0;
        for (const auto& comp : a.components) {
            CHECK(comp.n_profile.size() >= (comp.cells.empty() ? 0 : 1));
            for (const auto& border : comp.border_components) border_cells += border.cells.size();
        }
        CHECK(border_cells == p.support_size());
        // level definition checked directly per cell
        for (int i = 1; i <= p.row_count(); ++i) {
            for (int j = 1; p.in_support(i, j); ++j) {
                const int h = a.level[i - 1][j - 1];
                const int comp = a.component_id[i - 1][j - 1];
                for (int step = 1; step < h; ++step) {
                    REQUIRE(p.in_support(i + step, j + step));
                    CHECK(a.component_id[i + step - 1][j + step - 1] == comp);
                }
                const bool outside = !p.in_support(i + h, j + h) ||
                                     a.component_id[i + h - 1][j + h - 1] != comp;
                CHECK(outside);
            }
        }
    }
}

TEST_CASE("a_poly fixtures") {
    CHECK(a_poly(PlanePartition()) == Polynomial(1));
    CHECK(a_poly(pp({{1, 1}, {1, 1}})) ==
          Polynomial::one_minus_power(1) * Polynomial::one_minus_power(2));
    CHECK(a_poly(pp({{2, 1}, {1}})) == Polynomial::one_minus_power(1).pow(3));
}

TEST_CASE("a_poly structure on enumerated sets") {
    for (const PlanePartition& p : enumerate_pp(4, 4, 8)) {
        const auto a = analyze(p);
        const Polynomial poly = a.a_polynomial();
        CHECK(poly.coeff(0) == 1);  // A(0) = 1
        long long level_sum = 0;
        for (const auto& comp : a.components)
            for (const auto& border : comp.border_components) level_sum += border.level;
        CHECK(poly.degree() == level_sum);
    }
}

TEST_CASE("a_at_minus_one dichotomy") {
    CHECK(a_at_minus_one(pp({{2, 1}, {1}})) == 8);
    CHECK(a_at_minus_one(pp({{1, 1}, {1, 1}})) == 0);
    CHECK(a_at_minus_one(PlanePartition()) == 1);
    for (const PlanePartition& p : enumerate_pp(4, 4, 12)) {
        if (is_strict(p))
            CHECK(a_at_minus_one(p) == BigInt(1) << analyze(p).k);
        else
            CHECK(a_at_minus_one(p) == 0);
    }
}

TEST_CASE("one-column A is (1-t)^distinct") {
    for (const PlanePartition& p : enumerate_pp(8, 1, 8)) {
        int distinct = 0;
        for (int i = 1; i <= p.row_count(); ++i)
            if (p.entry(i, 1) != p.entry(i + 1, 1)) ++distinct;
        CHECK(a_poly(p) == Polynomial::one_minus_power(1).pow(distinct));
    }
}

TEST_CASE("border component shadow sanity") {
    for (const PlanePartition& p : enumerate_pp(4, 4, 9)) {
        const auto a = analyze(p);
        for (const auto& comp : a.components) {
            std::map<int, long long> cells_at_level;
            for (const auto& border : comp.border_components)
                cells_at_level[border.level] += static_cast<long long>(border.cells.size());
            for (const auto& [level, n] : comp.n_profile)
                if (level >= 2) CHECK(n <= cells_at_level[level - 1]);
        }
    }
}

TEST_CASE("rhombus count fixtures") {
    const auto rc = k_via_rhombi(sample_pi());
    CHECK(rc.b == 4);
    CHECK(rc.g == 6);
    CHECK(rc.k == 7);
    CHECK(analyze(sample_pi()).k == 7);

    const auto single = k_via_rhombi(pp({{9}}));
    CHECK(single.b == 1);
    CHECK(single.g == 1);
    CHECK(single.k == 1);

    CHECK(k_via_rhombi(pp({{2, 1}, {1}})).k == 3);
    CHECK_THROWS_AS(k_via_rhombi(pp({{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("rhombus count agrees with flood fill") {
    for (const PlanePartition& p : enumerate_spp(4, 4, 10))
        CHECK(k_via_rhombi(p).k == analyze(p).k);
}
