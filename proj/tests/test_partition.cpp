#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "planepart/enumerate.hpp"
#include "planepart/errors.hpp"
#include "planepart/partition.hpp"
#include "planepart/plane_partition.hpp"
#include "planepart/polynomial.hpp"
#include "planepart/series.hpp"
#include "test_support.hpp"

using namespace planepart;
using planepart::test::pp;
using planepart::test::sample_pi;

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition({3, 1}).weight() == 4);
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    CHECK(Partition({4, 2, 1}).conjugate().conjugate() == Partition({4, 2, 1}));
}

TEST_CASE("plane partition validation reports first bad cell") {
    CHECK_THROWS_WITH(pp({{1, 2}}), doctest::Contains("(1,2)"));
    CHECK_THROWS_WITH(pp({{1}, {2}}), doctest::Contains("(2,1)"));
    CHECK_THROWS_AS(pp({{1}, {1, 1}}), std::invalid_argument);
    CHECK(pp({{2, 1}, {1}}).weight() == 4);
}

TEST_CASE("diagonals") {
    const auto d = diagonals(pp({{2, 1}, {1}}));
    CHECK(d.lo == -1);
    CHECK(d.at(-1) == Partition({1}));
    CHECK(d.at(0) == Partition({2}));
    CHECK(d.at(1) == Partition({1}));

    CHECK(diagonals(PlanePartition()).diagonals.empty());
    CHECK(diagonals(sample_pi()).at(0) == Partition({5, 3, 2}));
}

TEST_CASE("strictness") {
    CHECK_FALSE(is_strict(pp({{1, 1}, {1, 1}})));
    CHECK(is_strict(pp({{2, 1}, {1}})));
    CHECK(is_strict(sample_pi()));
    CHECK(is_strict(PlanePartition()));
}

TEST_CASE("weight and trace") {
    CHECK(sample_pi().weight() == 35);
    CHECK(sample_pi().trace() == 10);
    CHECK(PlanePartition().weight() == 0);
    CHECK(PlanePartition().trace() == 0);
    CHECK(pp({{2, 1}, {1}}).weight() == 4);
    CHECK(pp({{2, 1}, {1}}).trace() == 2);
}

TEST_CASE("frobenius coordinates") {
    const auto fc = frobenius(Partition({5, 4, 3, 3}));
    CHECK(fc.p == std::vector<int>{5, 3, 1});
    CHECK(fc.q == std::vector<int>{4, 3, 2});

    CHECK(frobenius(Partition{}).d() == 0);

    const auto fc2 = frobenius(Partition({2, 2, 2}));
    CHECK(fc2.p == std::vector<int>{2, 1});
    CHECK(fc2.q == std::vector<int>{3, 2});

    CHECK_THROWS_AS(from_frobenius({{2, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_frobenius({{2, 1}, {2}}), std::invalid_argument);
}

TEST_CASE("frobenius roundtrip up to weight 20") {
    int checked = 0;
    for (const Partition& lambda : enumerate_partitions(20, 20)) {
        CHECK(from_frobenius(frobenius(lambda)) == lambda);
        ++checked;
    }
    CHECK(checked > 2000);
}

TEST_CASE("enumerate_pp fixtures") {
    const auto five = enumerate_pp(2, 2, 2);
    REQUIRE(five.size() == 5);
    CHECK(five[0] == PlanePartition());
    CHECK(five[1] == pp({{1}}));
    CHECK(five[2] == pp({{2}}));
    CHECK(five[3] == pp({{1, 1}}));
    CHECK(five[4] == pp({{1}, {1}}));

    const auto empty_only = enumerate_pp(3, 3, 0);
    REQUIRE(empty_only.size() == 1);
    CHECK(empty_only[0].empty());

    const auto boxes = enumerate_pp(1, 1, 3);
    REQUIRE(boxes.size() == 4);
    CHECK(boxes[3] == pp({{3}}));
}

TEST_CASE("enumerate_spp fixtures") {
    CHECK(enumerate_spp(2, 2, 2).size() == 5);
    const auto w3 = enumerate_spp(2, 2, 3);
    CHECK(std::find(w3.begin(), w3.end(), pp({{1, 1}, {1}})) != w3.end());
    const auto w4 = enumerate_spp(2, 2, 4);
    CHECK(std::find(w4.begin(), w4.end(), pp({{1, 1}, {1, 1}})) == w4.end());
    CHECK(enumerate_spp(1, 1, 7).size() == 8);
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(enumerate_pp(3, 3, 13), CapExceeded);
    EnumerationLimits tight;
    tight.max_count = 3;
    CHECK_THROWS_AS(enumerate_pp(2, 2, 2, tight), CapExceeded);
    EnumerationLimits wide;
    wide.max_weight_cap = 20;
    CHECK_NOTHROW(enumerate_pp(2, 2, 13, wide));
}

TEST_CASE("diagonal view rebuilds the grid") {
    for (const PlanePartition& p : enumerate_pp(4, 4, 12)) {
        CHECK(assemble_from_diagonals(diagonals(p)) == p);
        CHECK(is_valid_diagonal_sequence(diagonals(p)));
    }
}

TEST_CASE("horizontal strip condition characterizes plane partitions") {
    // Mutating one part of one diagonal either keeps the sequence valid (and
    // then the grid assembles) or breaks both views.
    std::mt19937 rng(20240811);
    const auto all = enumerate_pp(3, 3, 8);
    for (int trial = 0; trial < 500; ++trial) {
        const PlanePartition& base = all[rng() % all.size()];
        if (base.empty()) continue;
        DiagonalSequence seq = diagonals(base);
        auto& diag = seq.diagonals[rng() % seq.diagonals.size()];
        std::vector<int> parts = diag.parts();
        const int idx = static_cast<int>(rng() % parts.size());
        parts[idx] += (rng() % 2 == 0 && parts[idx] > 1) ? -1 : 1;
        std::sort(parts.rbegin(), parts.rend());
        diag = Partition(parts);

        bool assembles = true;
        try {
            const PlanePartition rebuilt = assemble_from_diagonals(seq);
            assembles = diagonals(rebuilt) == seq;
        } catch (const std::invalid_argument&) {
            assembles = false;
        }
        CHECK(assembles == is_valid_diagonal_sequence(seq));
    }
}

TEST_CASE("enumeration count matches the boxed MacMahon product") {
    // sum over enumerated pp of s^|pp| versus prod 1/(1-s^{i+j-1}).
    for (int r = 1; r <= 3; ++r) {
        for (int c = 1; c <= 3; ++c) {
            const int n = 8;
            TruncatedSeries<BigInt> counts(n);
            for (const PlanePartition& p : enumerate_pp(r, c, n))
                counts.add_term(static_cast<int>(p.weight()), BigInt(1));
            auto product = TruncatedSeries<BigInt>::one(n);
            for (int i = 1; i <= r; ++i)
                for (int j = 1; j <= c; ++j)
                    if (i + j - 1 <= n) product.div_one_minus_monomial(i + j - 1, BigInt(1));
            CHECK(counts == product);
        }
    }
}
