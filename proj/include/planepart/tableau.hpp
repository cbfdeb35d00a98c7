#pragma once

#include <compare>
#include <string>
#include <vector>

#include "planepart/components.hpp"
#include "planepart/partition.hpp"

namespace planepart {

// Element of the ordered alphabet 1 < 1' < 2 < 2' < ... Marked values carry
// the prime. Magnitude 0 with no mark is the zero entry of a marked matrix.
struct MarkedValue {
    int magnitude = 0;
    bool marked = false;

    bool is_zero() const { return magnitude == 0; }
    int key() const { return 2 * magnitude + (marked ? 1 : 0); }
    auto operator<=>(const MarkedValue& other) const { return key() <=> other.key(); }
    bool operator==(const MarkedValue& other) const { return key() == other.key(); }

    std::string to_string() const {
        return is_zero() ? "0" : std::to_string(magnitude) + (marked ? "'" : "");
    }
};

inline MarkedValue unmarked(int magnitude) { return {magnitude, false}; }
inline MarkedValue marked(int magnitude) { return {magnitude, true}; }

// Unmarked shifted tableau: strict-partition shape, row r indented by r-1,
// rows and columns weakly decreasing, and entries strictly decreasing along
// every (+1,+1) diagonal (the diagonal form of the no-constant-2x2 rule,
// which it implies in the interior and extends across the main diagonal).
class ShiftedTableau {
public:
    ShiftedTableau() = default;
    explicit ShiftedTableau(std::vector<std::vector<int>> rows);

    bool empty() const { return rows_.empty(); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;

    // 1-based shifted coordinates; row r holds columns r..r+len-1.
    bool has_cell(int r, int c) const;
    int at(int r, int c) const;

    long long cell_count() const;
    long long entry_sum() const;
    int max_entry() const;

    // d-th diagonal (d >= 1): entries at (r, r+d-1), top row first.
    std::vector<int> diagonal(int d) const;

    // Connected components of edge-adjacent equal entries.
    int k() const;
    std::vector<std::vector<Cell>> component_cells() const;

    bool operator==(const ShiftedTableau&) const = default;
    std::string to_string() const;

private:
    std::vector<std::vector<int>> rows_;
};

// Marked shifted tableau: weakly decreasing rows and columns in the alphabet
// order, each unmarked value at most once per column, each marked value at
// most once per row.
class MarkedShiftedTableau {
public:
    MarkedShiftedTableau() = default;
    explicit MarkedShiftedTableau(std::vector<std::vector<MarkedValue>> rows);

    bool empty() const { return rows_.empty(); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<MarkedValue>>& rows() const { return rows_; }
    Partition shape() const;

    bool has_cell(int r, int c) const;
    MarkedValue at(int r, int c) const;

    long long cell_count() const;
    long long magnitude_sum() const;
    int max_magnitude() const;
    bool diagonal_unmarked() const;

    ShiftedTableau unmark() const;
    // Components of the underlying unmarked tableau.
    int k() const;

    bool operator==(const MarkedShiftedTableau&) const = default;
    std::string to_string() const;

private:
    std::vector<std::vector<MarkedValue>> rows_;
};

// Rectangular matrix over the alphabet plus zero.
class MarkedMatrix {
public:
    MarkedMatrix() = default;
    MarkedMatrix(int rows, int cols);
    explicit MarkedMatrix(std::vector<std::vector<MarkedValue>> entries);

    int row_count() const { return static_cast<int>(entries_.size()); }
    int col_count() const { return entries_.empty() ? 0 : static_cast<int>(entries_[0].size()); }
    MarkedValue at(int i, int j) const { return entries_.at(i - 1).at(j - 1); }
    void set(int i, int j, MarkedValue v) { entries_.at(i - 1).at(j - 1) = v; }
    const std::vector<std::vector<MarkedValue>>& entries() const { return entries_; }

    long long magnitude_sum() const;

    bool operator==(const MarkedMatrix&) const = default;
    std::string to_string() const;

private:
    std::vector<std::vector<MarkedValue>> entries_;
};

}  // namespace planepart
