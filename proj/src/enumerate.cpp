#include "planepart/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "planepart/errors.hpp"

namespace planepart {

namespace {

// Weakly decreasing rows bounded above entrywise by the previous row,
// built row by row with the remaining weight budget as the pruning bound.
void extend_rows(std::vector<std::vector<int>>& rows, const std::vector<int>& prev_row,
                 int rows_left, int budget, long long max_count,
                 std::vector<PlanePartition>& out) {
    out.emplace_back(PlanePartition(rows));
    if (static_cast<long long>(out.size()) > max_count)
        throw CapExceeded("enumeration exceeded the configured count cap of " +
                          std::to_string(max_count));
    if (rows_left == 0 || budget == 0 || prev_row.empty()) return;

    std::vector<int> row;
    std::function<void(int, int)> extend_row = [&](int col, int remaining) {
        if (!row.empty()) {
            rows.push_back(row);
            extend_rows(rows, row, rows_left - 1, remaining, max_count, out);
            rows.pop_back();
        }
        if (col >= static_cast<int>(prev_row.size())) return;
        const int bound = std::min({prev_row[col], remaining, row.empty() ? remaining : row.back()});
        for (int v = bound; v >= 1; --v) {
            row.push_back(v);
            extend_row(col + 1, remaining - v);
            row.pop_back();
        }
    };
    extend_row(0, budget);
}

}  // namespace

std::vector<PlanePartition> enumerate_pp(int rows, int cols, int max_weight,
                                         const EnumerationLimits& limits) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("box must have rows, cols >= 1");
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    if (max_weight > limits.max_weight_cap)
        throw CapExceeded("requested weight " + std::to_string(max_weight) +
                          " exceeds the configured weight cap of " +
                          std::to_string(limits.max_weight_cap));

    std::vector<PlanePartition> out;
    out.emplace_back();  // the empty plane partition
    std::vector<std::vector<int>> grid;
    std::vector<int> first_row;
    std::function<void(int)> extend_first = [&](int remaining) {
        if (!first_row.empty()) {
            grid.push_back(first_row);
            extend_rows(grid, first_row, rows - 1, remaining, limits.max_count, out);
            grid.pop_back();
        }
        if (static_cast<int>(first_row.size()) >= cols) return;
        const int bound = first_row.empty() ? remaining : std::min(remaining, first_row.back());
        for (int v = bound; v >= 1; --v) {
            first_row.push_back(v);
            extend_first(remaining - v);
            first_row.pop_back();
        }
    };
    extend_first(max_weight);

    std::sort(out.begin(), out.end(), [](const PlanePartition& a, const PlanePartition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.rows() > b.rows();
    });
    return out;
}

std::vector<PlanePartition> enumerate_spp(int rows, int cols, int max_weight,
                                          const EnumerationLimits& limits) {
    std::vector<PlanePartition> all = enumerate_pp(rows, cols, max_weight, limits);
    std::vector<PlanePartition> out;
    for (auto& pp : all)
        if (is_strict(pp)) out.push_back(std::move(pp));
    return out;
}

}  // namespace planepart
