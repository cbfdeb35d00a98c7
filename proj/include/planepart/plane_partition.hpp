#pragma once

#include <map>
#include <string>
#include <vector>

#include "planepart/partition.hpp"

namespace planepart {

// Plane partition stored as row-major grid over its support Young diagram.
// Entries weakly decrease along rows and columns; the diagonal sequence is a
// derived view, not the storage format.
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> rows);

    bool empty() const { return rows_.empty(); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // entry(i,j) is 1-based and reads 0 outside the support.
    int entry(int i, int j) const;
    bool in_support(int i, int j) const { return entry(i, j) > 0; }
    long long support_size() const;

    long long weight() const;
    long long trace() const;

    Partition support_shape() const;
    PlanePartition transpose() const;

    // Partition read down the (+1,+1) diagonal starting from box (i,j).
    Partition diagonal_from(int i, int j) const;

    auto operator<=>(const PlanePartition&) const = default;
    std::string to_string() const;

private:
    std::vector<std::vector<int>> rows_;
};

// The diagonal view: lambda^k for k from -(rows-1) to (cols-1), where
// lambda^0 is the main diagonal.
struct DiagonalSequence {
    int lo = 0;  // smallest diagonal index
    std::vector<Partition> diagonals;

    int hi() const { return lo + static_cast<int>(diagonals.size()) - 1; }
    const Partition& at(int k) const;
    bool operator==(const DiagonalSequence&) const = default;
};

DiagonalSequence diagonals(const PlanePartition& pp);

// Rebuild the grid from a diagonal sequence; throws if the sequence does not
// assemble into a valid plane partition.
PlanePartition assemble_from_diagonals(const DiagonalSequence& seq);

// Containment-and-horizontal-strip test on a two-sided diagonal sequence:
// ... c lambda^{-1} c lambda^0 ) lambda^1 ) ... with every consecutive skew
// a horizontal strip. Equivalent to the assembled grid being a plane
// partition.
bool is_valid_diagonal_sequence(const DiagonalSequence& seq);

// True iff every diagonal partition has all distinct parts.
bool is_strict(const PlanePartition& pp);

}  // namespace planepart
