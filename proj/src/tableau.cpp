#include "planepart/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace planepart {

namespace {

void check_strict_shape(const std::vector<int>& lengths) {
    for (std::size_t r = 0; r + 1 < lengths.size(); ++r)
        if (lengths[r] <= lengths[r + 1])
            throw std::invalid_argument("shifted shape must be strictly decreasing at row " +
                                        std::to_string(r + 2));
    if (!lengths.empty() && lengths.back() < 1)
        throw std::invalid_argument("shifted tableau rows must be nonempty");
}

template <typename Rows>
std::vector<std::vector<Cell>> components_of(const Rows& rows, int row_count,
                                             auto has_cell, auto magnitude_at) {
    std::vector<std::vector<Cell>> comps;
    std::map<Cell, int> id;
    for (int r = 1; r <= row_count; ++r) {
        const int len = static_cast<int>(rows[r - 1].size());
        for (int c = r; c < r + len; ++c) {
            if (id.count({r, c})) continue;
            const int label = static_cast<int>(comps.size());
            comps.emplace_back();
            std::vector<Cell> stack{{r, c}};
            id[{r, c}] = label;
            const int mag = magnitude_at(r, c);
            while (!stack.empty()) {
                auto [ci, cj] = stack.back();
                stack.pop_back();
                comps[label].push_back({ci, cj});
                constexpr int dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                for (const auto& d : dirs) {
                    const Cell n{ci + d[0], cj + d[1]};
                    if (!has_cell(n.first, n.second) || id.count(n)) continue;
                    if (magnitude_at(n.first, n.second) != mag) continue;
                    id[n] = label;
                    stack.push_back(n);
                }
            }
            std::sort(comps[label].begin(), comps[label].end());
        }
    }
    return comps;
}

}  // namespace

ShiftedTableau::ShiftedTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
    check_strict_shape(lengths);
    for (int r = 1; r <= row_count(); ++r) {
        for (int c = r; c < r + lengths[r - 1]; ++c) {
            if (at(r, c) < 1)
                throw std::invalid_argument("tableau entries must be positive");
            if (c > r && at(r, c) > at(r, c - 1))
                throw std::invalid_argument("tableau row not weakly decreasing");
            if (has_cell(r - 1, c) && at(r, c) > at(r - 1, c))
                throw std::invalid_argument("tableau column not weakly decreasing");
            if (has_cell(r + 1, c + 1) && at(r + 1, c + 1) >= at(r, c))
                throw std::invalid_argument("tableau diagonal not strictly decreasing");
        }
    }
}

Partition ShiftedTableau::shape() const {
    std::vector<int> lengths;
    for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lengths));
}

bool ShiftedTableau::has_cell(int r, int c) const {
    if (r < 1 || r > row_count()) return false;
    return c >= r && c < r + static_cast<int>(rows_[r - 1].size());
}

int ShiftedTableau::at(int r, int c) const {
    if (!has_cell(r, c)) throw std::out_of_range("no cell at given coordinates");
    return rows_[r - 1][c - r];
}

long long ShiftedTableau::cell_count() const {
    long long n = 0;
    for (const auto& row : rows_) n += static_cast<long long>(row.size());
    return n;
}

long long ShiftedTableau::entry_sum() const {
    long long s = 0;
    for (const auto& row : rows_)
        for (int v : row) s += v;
    return s;
}

int ShiftedTableau::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int v : row) m = std::max(m, v);
    return m;
}

std::vector<int> ShiftedTableau::diagonal(int d) const {
    std::vector<int> out;
    for (int r = 1; has_cell(r, r + d - 1); ++r) out.push_back(at(r, r + d - 1));
    return out;
}

std::vector<std::vector<Cell>> ShiftedTableau::component_cells() const {
    return components_of(
        rows_, row_count(), [this](int r, int c) { return has_cell(r, c); },
        [this](int r, int c) { return at(r, c); });
}

int ShiftedTableau::k() const { return static_cast<int>(component_cells().size()); }

std::string ShiftedTableau::to_string() const {
    std::ostringstream out;
    for (int r = 1; r <= row_count(); ++r) {
        if (r > 1) out << "\n";
        out << std::string(2 * (r - 1), ' ');
        for (std::size_t i = 0; i < rows_[r - 1].size(); ++i) {
            if (i) out << " ";
            out << rows_[r - 1][i];
        }
    }
    return out.str();
}

MarkedShiftedTableau::MarkedShiftedTableau(std::vector<std::vector<MarkedValue>> rows)
    : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
    check_strict_shape(lengths);
    for (int r = 1; r <= row_count(); ++r) {
        for (int c = r; c < r + lengths[r - 1]; ++c) {
            const MarkedValue v = at(r, c);
            if (v.magnitude < 1)
                throw std::invalid_argument("tableau entries must be positive");
            if (c > r && v > at(r, c - 1))
                throw std::invalid_argument("tableau row not weakly decreasing");
            if (has_cell(r - 1, c) && v > at(r - 1, c))
                throw std::invalid_argument("tableau column not weakly decreasing");
            // Uniqueness: marked at most once per row, unmarked at most once
            // per column. Equal neighbors are the only candidates.
            if (c > r && v.marked && at(r, c - 1) == v)
                throw std::invalid_argument("marked value repeated in a row");
            if (!v.marked && has_cell(r - 1, c) && at(r - 1, c) == v)
                throw std::invalid_argument("unmarked value repeated in a column");
        }
    }
}

Partition MarkedShiftedTableau::shape() const {
    std::vector<int> lengths;
    for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lengths));
}

bool MarkedShiftedTableau::has_cell(int r, int c) const {
    if (r < 1 || r > row_count()) return false;
    return c >= r && c < r + static_cast<int>(rows_[r - 1].size());
}

MarkedValue MarkedShiftedTableau::at(int r, int c) const {
    if (!has_cell(r, c)) throw std::out_of_range("no cell at given coordinates");
    return rows_[r - 1][c - r];
}

long long MarkedShiftedTableau::cell_count() const {
    long long n = 0;
    for (const auto& row : rows_) n += static_cast<long long>(row.size());
    return n;
}

long long MarkedShiftedTableau::magnitude_sum() const {
    long long s = 0;
    for (const auto& row : rows_)
        for (const MarkedValue& v : row) s += v.magnitude;
    return s;
}

int MarkedShiftedTableau::max_magnitude() const {
    int m = 0;
    for (const auto& row : rows_)
        for (const MarkedValue& v : row) m = std::max(m, v.magnitude);
    return m;
}

bool MarkedShiftedTableau::diagonal_unmarked() const {
    for (int r = 1; r <= row_count(); ++r)
        if (at(r, r).marked) return false;
    return true;
}

ShiftedTableau MarkedShiftedTableau::unmark() const {
    std::vector<std::vector<int>> rows;
    for (const auto& row : rows_) {
        rows.emplace_back();
        for (const MarkedValue& v : row) rows.back().push_back(v.magnitude);
    }
    return ShiftedTableau(std::move(rows));
}

int MarkedShiftedTableau::k() const {
    const auto comps = components_of(
        rows_, row_count(), [this](int r, int c) { return has_cell(r, c); },
        [this](int r, int c) { return at(r, c).magnitude; });
    return static_cast<int>(comps.size());
}

std::string MarkedShiftedTableau::to_string() const {
    std::ostringstream out;
    for (int r = 1; r <= row_count(); ++r) {
        if (r > 1) out << "\n";
        out << std::string(3 * (r - 1), ' ');
        for (std::size_t i = 0; i < rows_[r - 1].size(); ++i) {
            if (i) out << " ";
            out << rows_[r - 1][i].to_string();
        }
    }
    return out.str();
}

MarkedMatrix::MarkedMatrix(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
    entries_.assign(rows, std::vector<MarkedValue>(cols));
}

MarkedMatrix::MarkedMatrix(std::vector<std::vector<MarkedValue>> entries)
    : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].size() != entries_[0].size())
            throw std::invalid_argument("matrix rows must have equal lengths");
        for (const MarkedValue& v : entries_[i]) {
            if (v.magnitude < 0 || (v.magnitude == 0 && v.marked))
                throw std::invalid_argument("matrix entries are zero or marked values");
        }
    }
}

long long MarkedMatrix::magnitude_sum() const {
    long long s = 0;
    for (const auto& row : entries_)
        for (const MarkedValue& v : row) s += v.magnitude;
    return s;
}

std::string MarkedMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < row_count(); ++i) {
        if (i) out << "\n";
        for (int j = 0; j < col_count(); ++j) {
            if (j) out << " ";
            out << entries_[i][j].to_string();
        }
    }
    return out.str();
}

}  // namespace planepart
