#pragma once

#include <vector>

#include "planepart/plane_partition.hpp"

namespace planepart {

// Resource guards for enumeration. Exceeding either limit raises CapExceeded
// rather than silently truncating.
struct EnumerationLimits {
    int max_weight_cap = 12;
    long long max_count = 2'000'000;
};

// Every plane partition with at most `rows` rows, `cols` columns and weight
// at most `max_weight`, each exactly once, in canonical order: weight
// ascending, then descending lexicographic on the row lists.
std::vector<PlanePartition> enumerate_pp(int rows, int cols, int max_weight,
                                         const EnumerationLimits& limits = {});

// As enumerate_pp, filtered to strict plane partitions.
std::vector<PlanePartition> enumerate_spp(int rows, int cols, int max_weight,
                                          const EnumerationLimits& limits = {});

}  // namespace planepart
