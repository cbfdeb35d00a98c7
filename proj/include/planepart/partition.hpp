#pragma once

#include <string>
#include <vector>

namespace planepart {

// Ordinary partition: weakly decreasing positive parts, trailing zeros never
// stored. The empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition from_parts_with_zeros(std::vector<int> parts);

    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    // part(i) is 1-based and reads 0 beyond the stored length.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool is_strict() const;
    bool contains(const Partition& inner) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// lambda/mu (or mu/lambda when mu is the larger) is a horizontal strip:
// at most one cell per column, i.e. the two partitions interlace.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

// Frobenius coordinates with the +1 convention: p_i = lambda_i - i + 1,
// q_i = lambda'_i - i + 1 for the d diagonal cells.
struct FrobeniusCoords {
    std::vector<int> p;
    std::vector<int> q;

    int d() const { return static_cast<int>(p.size()); }
    bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords frobenius(const Partition& lambda);
// Inverse of frobenius; rejects non-strict or unequal-length coordinate lists.
Partition from_frobenius(const FrobeniusCoords& fc);

// All partitions of weight <= max_weight with at most max_parts parts, in
// (weight, descending-lex) order matching the plane-partition enumeration.
std::vector<Partition> enumerate_partitions(int max_parts, int max_weight);

}  // namespace planepart
