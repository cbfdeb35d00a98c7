#pragma once

#include <map>
#include <vector>

#include "planepart/plane_partition.hpp"
#include "planepart/polynomial.hpp"

namespace planepart {

using Cell = std::pair<int, int>;  // 1-based (row, column)

struct BorderComponent {
    int level = 0;
    std::vector<Cell> cells;  // sorted (row, column)
    bool operator==(const BorderComponent&) const = default;
};

struct ConnectedComponent {
    int value = 0;
    std::vector<Cell> cells;                       // sorted (row, column)
    std::vector<BorderComponent> border_components;  // ordered by topmost-leftmost cell
    std::map<int, int> n_profile;                  // level -> number of border components

    bool operator==(const ConnectedComponent&) const = default;
};

// Connected components (edge-adjacent equal entries), per-cell levels
// h(i,j) = least h >= 1 with (i+h,j+h) outside the cell's component, and the
// border components (maximal connected equal-level subsets).
struct ComponentAnalysis {
    int k = 0;
    std::vector<ConnectedComponent> components;  // ordered by topmost-leftmost cell
    std::vector<std::vector<int>> component_id;  // per support cell, 0-based id
    std::vector<std::vector<int>> level;         // per support cell

    // Factored Hall-Littlewood weight: exponent of (1 - t^i) over all
    // components, i.e. the total n_i.
    std::map<int, long long> a_factors() const;
    Polynomial a_polynomial() const;
};

ComponentAnalysis analyze(const PlanePartition& pp);

// A_pi(t) = prod over components of prod_i (1 - t^i)^{n_i}.
Polynomial a_poly(const PlanePartition& pp);

// A_pi(-1): 2^{k} when pp is strict, 0 otherwise.
BigInt a_at_minus_one(const PlanePartition& pp);

// Rhombus-component counts read column-by-column off the 3-D diagram of a
// strict plane partition: b from the right-facing faces, g from the
// left-facing ones, and k = b + g - l(lambda^0).
struct RhombusCount {
    long long b = 0;
    long long g = 0;
    long long k = 0;
};

RhombusCount k_via_rhombi(const PlanePartition& pp);

}  // namespace planepart
