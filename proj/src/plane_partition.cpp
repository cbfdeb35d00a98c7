#include "planepart/plane_partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace planepart {

namespace {

std::string cell_ref(int i, int j) {
    return "cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    // Validation reports the first violated invariant with 1-based cell
    // coordinates, row before column.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty())
            throw std::invalid_argument("row " + std::to_string(i + 1) + " is empty");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw std::invalid_argument("row lengths must be weakly decreasing at row " +
                                        std::to_string(i + 1));
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (rows_[i][j] < 1)
                throw std::invalid_argument("entry at " + cell_ref(i + 1, j + 1) +
                                            " must be positive (no stored zeros)");
            if (j > 0 && rows_[i][j] > rows_[i][j - 1])
                throw std::invalid_argument("row must be weakly decreasing at " +
                                            cell_ref(i + 1, j + 1));
            if (i > 0 && rows_[i][j] > rows_[i - 1][j])
                throw std::invalid_argument("column must be weakly decreasing at " +
                                            cell_ref(i + 1, j + 1));
        }
    }
}

int PlanePartition::entry(int i, int j) const {
    if (i < 1 || j < 1) return 0;
    if (i > row_count()) return 0;
    const auto& row = rows_[i - 1];
    if (j > static_cast<int>(row.size())) return 0;
    return row[j - 1];
}

long long PlanePartition::support_size() const {
    long long n = 0;
    for (const auto& row : rows_) n += static_cast<long long>(row.size());
    return n;
}

long long PlanePartition::weight() const {
    long long w = 0;
    for (const auto& row : rows_)
        for (int v : row) w += v;
    return w;
}

long long PlanePartition::trace() const {
    long long t = 0;
    for (int i = 1; i <= row_count(); ++i) t += entry(i, i);
    return t;
}

Partition PlanePartition::support_shape() const {
    std::vector<int> shape;
    for (const auto& row : rows_) shape.push_back(static_cast<int>(row.size()));
    return Partition(std::move(shape));
}

PlanePartition PlanePartition::transpose() const {
    if (empty()) return PlanePartition();
    std::vector<std::vector<int>> t(rows_[0].size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j) t[j].push_back(rows_[i][j]);
    return PlanePartition(std::move(t));
}

Partition PlanePartition::diagonal_from(int i, int j) const {
    std::vector<int> parts;
    for (int h = 0; in_support(i + h, j + h); ++h) parts.push_back(entry(i + h, j + h));
    return Partition(std::move(parts));
}

std::string PlanePartition::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ",";
        out << "[";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ",";
            out << rows_[i][j];
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

const Partition& DiagonalSequence::at(int k) const {
    static const Partition kEmpty;
    if (k < lo || k > hi()) return kEmpty;
    return diagonals[k - lo];
}

DiagonalSequence diagonals(const PlanePartition& pp) {
    DiagonalSequence seq;
    if (pp.empty()) return seq;
    seq.lo = -(pp.row_count() - 1);
    for (int k = seq.lo; k <= pp.col_count() - 1; ++k) {
        const int i = k >= 0 ? 1 : 1 - k;
        const int j = k >= 0 ? 1 + k : 1;
        seq.diagonals.push_back(pp.diagonal_from(i, j));
    }
    return seq;
}

PlanePartition assemble_from_diagonals(const DiagonalSequence& seq) {
    if (seq.diagonals.empty()) return PlanePartition();
    std::vector<std::vector<int>> rows;
    for (int k = seq.lo; k <= seq.hi(); ++k) {
        const Partition& diag = seq.at(k);
        const int i0 = k >= 0 ? 1 : 1 - k;
        const int j0 = k >= 0 ? 1 + k : 1;
        for (int idx = 1; idx <= diag.length(); ++idx) {
            const int i = i0 + idx - 1, j = j0 + idx - 1;
            if (static_cast<int>(rows.size()) < i) rows.resize(i);
            auto& row = rows[i - 1];
            if (static_cast<int>(row.size()) < j) row.resize(j, 0);
            row[j - 1] = diag.part(idx);
        }
    }
    // Any gap left as 0 inside a row, or an empty row, fails construction.
    return PlanePartition(std::move(rows));
}

bool is_valid_diagonal_sequence(const DiagonalSequence& seq) {
    if (seq.diagonals.empty()) return true;
    if (seq.lo > 0 || seq.hi() < 0) return false;
    // Left tail: [lambda^{lo}/empty] must itself be a horizontal strip.
    if (!is_horizontal_strip(seq.at(seq.lo), Partition())) return false;
    for (int k = seq.lo; k <= seq.hi(); ++k) {
        const Partition& cur = seq.at(k);
        if (cur.empty()) return false;  // stored diagonals must be nonempty
        const Partition& next = seq.at(k + 1);  // empty beyond the range
        const Partition& outer = k < 0 ? next : cur;
        const Partition& inner = k < 0 ? cur : next;
        if (!outer.contains(inner)) return false;
        if (!is_horizontal_strip(outer, inner)) return false;
    }
    return true;
}

bool is_strict(const PlanePartition& pp) {
    const DiagonalSequence seq = diagonals(pp);
    for (const Partition& d : seq.diagonals)
        if (!d.is_strict()) return false;
    return true;
}

}  // namespace planepart
