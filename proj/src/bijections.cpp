#include "planepart/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "planepart/errors.hpp"

namespace planepart {

// ---------------------------------------------------------------------------
// Pi correspondence

std::pair<ShiftedTableau, ShiftedTableau> pi_forward(const PlanePartition& pp) {
    if (!is_strict(pp)) throw std::invalid_argument("pi_forward requires a strict plane partition");
    const int max_entry = pp.empty() ? 0 : pp.entry(1, 1);

    std::vector<FrobeniusCoords> slices;
    for (int d = 1; d <= max_entry; ++d) {
        std::vector<int> rows;
        for (int i = 1; i <= pp.row_count(); ++i) {
            int len = 0;
            while (pp.entry(i, len + 1) >= d) ++len;
            if (len == 0) break;
            rows.push_back(len);
        }
        slices.push_back(frobenius(Partition(std::move(rows))));
    }

    std::vector<std::vector<int>> s_rows, t_rows;
    for (std::size_t d = 0; d < slices.size(); ++d) {
        for (std::size_t r = 0; r < slices[d].p.size(); ++r) {
            if (s_rows.size() <= r) {
                s_rows.emplace_back();
                t_rows.emplace_back();
            }
            s_rows[r].push_back(slices[d].p[r]);
            t_rows[r].push_back(slices[d].q[r]);
        }
    }
    return {ShiftedTableau(std::move(s_rows)), ShiftedTableau(std::move(t_rows))};
}

PlanePartition pi_backward(const ShiftedTableau& s, const ShiftedTableau& t) {
    if (s.shape() != t.shape()) throw InvalidPair("tableaux must have the same shape");
    if (s.empty()) return PlanePartition();

    const int width = s.shape().part(1);
    std::vector<Partition> slices;
    for (int d = 1; d <= width; ++d) {
        FrobeniusCoords fc{s.diagonal(d), t.diagonal(d)};
        try {
            slices.push_back(from_frobenius(fc));
        } catch (const std::invalid_argument& e) {
            throw InvalidPair(std::string("diagonal ") + std::to_string(d) + ": " + e.what());
        }
    }
    for (std::size_t d = 0; d + 1 < slices.size(); ++d)
        if (!slices[d].contains(slices[d + 1]))
            throw InvalidPair("horizontal slices are not nested");

    std::vector<std::vector<int>> grid;
    for (int i = 1; i <= slices[0].length(); ++i) {
        grid.emplace_back();
        for (int j = 1; j <= slices[0].part(i); ++j) {
            int entry = 0;
            for (std::size_t d = 0; d < slices.size(); ++d)
                if (slices[d].part(i) >= j) entry = static_cast<int>(d) + 1;
            grid.back().push_back(entry);
        }
    }
    PlanePartition pp;
    try {
        pp = PlanePartition(std::move(grid));
    } catch (const std::invalid_argument& e) {
        throw InvalidPair(std::string("slices do not assemble: ") + e.what());
    }
    if (!is_strict(pp)) throw InvalidPair("assembled plane partition is not strict");
    return pp;
}

// ---------------------------------------------------------------------------
// Markings

std::vector<MarkedShiftedTableau> enumerate_markings(const ShiftedTableau& s,
                                                     bool forbid_diagonal_marks) {
    const auto components = s.component_cells();

    // Within a component (always a ribbon path here) a cell with a left
    // neighbour is forced unmarked, a cell with a neighbour below is forced
    // marked; exactly one cell remains free, giving the two markings.
    std::vector<std::vector<std::map<Cell, bool>>> options;
    for (const auto& comp : components) {
        std::set<Cell> cells(comp.begin(), comp.end());
        std::map<Cell, bool> forced;
        std::optional<Cell> free_cell;
        for (const Cell& cell : comp) {
            const bool has_left = cells.count({cell.first, cell.second - 1}) > 0;
            const bool has_below = cells.count({cell.first + 1, cell.second}) > 0;
            if (has_left && has_below)
                throw std::logic_error("border component is not a ribbon");
            if (has_left)
                forced[cell] = false;
            else if (has_below)
                forced[cell] = true;
            else {
                if (free_cell) throw std::logic_error("border component has two free cells");
                free_cell = cell;
            }
        }
        if (!free_cell) throw std::logic_error("border component has no free cell");

        std::vector<std::map<Cell, bool>> comp_options;
        for (bool mark_free : {false, true}) {
            std::map<Cell, bool> marking = forced;
            marking[*free_cell] = mark_free;
            if (forbid_diagonal_marks) {
                bool marks_diagonal = false;
                for (const auto& [cell, m] : marking)
                    if (m && cell.first == cell.second) marks_diagonal = true;
                if (marks_diagonal) continue;
            }
            comp_options.push_back(std::move(marking));
        }
        if (comp_options.empty())
            throw std::logic_error("component lost both markings");
        options.push_back(std::move(comp_options));
    }

    std::vector<MarkedShiftedTableau> out;
    std::vector<std::size_t> choice(options.size(), 0);
    while (true) {
        std::vector<std::vector<MarkedValue>> rows;
        for (int r = 1; r <= s.row_count(); ++r) {
            rows.emplace_back();
            for (int c = r; s.has_cell(r, c); ++c) rows.back().push_back(unmarked(s.at(r, c)));
        }
        for (std::size_t ci = 0; ci < options.size(); ++ci)
            for (const auto& [cell, m] : options[ci][choice[ci]])
                rows[cell.first - 1][cell.second - cell.first].marked = m;
        out.emplace_back(MarkedShiftedTableau(std::move(rows)));

        // mixed-radix increment, first component most significant
        std::size_t i = options.size();
        while (i > 0) {
            --i;
            if (++choice[i] < options[i].size()) break;
            choice[i] = 0;
            if (i == 0) return out;
        }
        if (options.empty()) return out;
    }
}

// ---------------------------------------------------------------------------
// Insertion primitives

BumpOutcome bump(std::vector<MarkedValue>& v, MarkedValue x) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < x) {
            BumpOutcome out{v[i], static_cast<int>(i)};
            v[i] = x;
            return out;
        }
    }
    v.push_back(x);
    return {};
}

BumpOutcome eqbump(std::vector<MarkedValue>& v, MarkedValue x) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= x) {
            BumpOutcome out{v[i], static_cast<int>(i)};
            v[i] = x;
            return out;
        }
    }
    v.push_back(x);
    return {};
}

// ---------------------------------------------------------------------------
// Shifted Knuth correspondence

TwoLineArray knuth_encode(const MarkedMatrix& a) {
    TwoLineArray e;
    for (int i = a.row_count(); i >= 1; --i) {
        for (int j = a.col_count(); j >= 1; --j) {
            const MarkedValue entry = a.at(i, j);
            for (int copy = 0; copy < entry.magnitude; ++copy) {
                e.top.push_back(i);
                e.bottom.push_back({j, entry.marked && copy == 0});
            }
        }
    }
    return e;
}

namespace {

using Rows = std::vector<std::vector<MarkedValue>>;

bool cell_exists(const Rows& rows, int r, int c) {
    if (r < 1 || r > static_cast<int>(rows.size())) return false;
    return c >= r && c - r < static_cast<int>(rows[r - 1].size());
}

MarkedValue& cell_at(Rows& rows, int r, int c) { return rows[r - 1][c - r]; }

int column_height(const Rows& rows, int c) {
    int h = 0;
    while (cell_exists(rows, h + 1, c)) ++h;
    return h;
}

struct InsertResult {
    Cell cell{0, 0};
    bool primed = false;
};

// Column phase entered after a bump at the main diagonal: the ejected value
// walks right through columns, with the bump roles of marked and unmarked
// swapped relative to rows. It never touches another diagonal cell.
InsertResult column_phase(Rows& rows, MarkedValue y, int c) {
    for (;; ++c) {
        const int h = column_height(rows, c);
        int pos = 0;
        for (int rr = 1; rr <= h; ++rr) {
            const MarkedValue z = cell_at(rows, rr, c);
            if (y.marked ? z < y : z <= y) {
                pos = rr;
                break;
            }
        }
        if (pos == 0) {
            if (h + 1 >= c || h + 1 > static_cast<int>(rows.size()) ||
                static_cast<int>(rows[h].size()) != c - h - 1)
                throw std::logic_error("column phase append off the staircase");
            rows[h].push_back(y);
            return {{h + 1, c}, true};
        }
        std::swap(y, cell_at(rows, pos, c));
    }
}

// Row phase: unmarked values bump the leftmost strictly smaller entry,
// marked values the leftmost entry less than or equal (so a marked value
// displaces its own duplicate instead of doubling in a row). Ejecting the
// diagonal entry hands control to the column phase; when a marked value
// ejects its equal there, both copies lose the prime.
InsertResult insert_value(Rows& rows, MarkedValue x) {
    MarkedValue cur = x;
    for (int r = 1;; ++r) {
        if (r > static_cast<int>(rows.size())) rows.emplace_back();
        auto& row = rows[r - 1];
        int pos = -1;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (cur.marked ? row[i] <= cur : row[i] < cur) {
                pos = static_cast<int>(i);
                break;
            }
        }
        if (pos == -1) {
            row.push_back(cur);
            return {{r, r + static_cast<int>(row.size()) - 1}, false};
        }
        if (pos == 0) {  // the diagonal cell (r, r)
            if (cur.marked && row[0] == cur) {
                row[0] = unmarked(cur.magnitude);
                return column_phase(rows, unmarked(cur.magnitude), r + 1);
            }
            MarkedValue ejected = row[0];
            row[0] = cur;
            return column_phase(rows, ejected, r + 1);
        }
        std::swap(cur, row[pos]);
    }
}

void remove_corner(Rows& rows, int r, int c) {
    if (!cell_exists(rows, r, c) || c != r + static_cast<int>(rows[r - 1].size()) - 1)
        throw InvalidPair("cell is not at the end of its row");
    if (r < static_cast<int>(rows.size()) &&
        static_cast<int>(rows[r - 1].size()) - 1 <= static_cast<int>(rows[r].size()))
        throw InvalidPair("cell is not a removable corner");
    rows[r - 1].pop_back();
    if (rows[r - 1].empty()) {
        if (r != static_cast<int>(rows.size())) throw InvalidPair("emptied a non-final row");
        rows.pop_back();
    }
}

// Undo one insertion whose new cell and primed flag are known; returns the
// value that was originally inserted.
MarkedValue reverse_insert(Rows& rows, Cell cell, bool primed) {
    MarkedValue carried = cell_at(rows, cell.first, cell.second);
    remove_corner(rows, cell.first, cell.second);
    int start_row = cell.first - 1;

    if (primed) {
        for (int c = cell.second - 1;; --c) {
            if (c < 1) throw InvalidPair("reverse column walk left the tableau");
            if (cell_exists(rows, c, c)) {
                const MarkedValue z = cell_at(rows, c, c);
                if (carried < z) {
                    cell_at(rows, c, c) = carried;
                    carried = z;
                    start_row = c - 1;
                    break;
                }
                if (carried == z && !carried.marked) {
                    // reverse of the unprime adjustment: both copies regain
                    // the mark
                    cell_at(rows, c, c) = marked(z.magnitude);
                    carried = marked(z.magnitude);
                    start_row = c - 1;
                    break;
                }
            }
            const int h = std::min(column_height(rows, c), c - 1);
            int pos = 0;
            for (int rr = h; rr >= 1; --rr) {
                const MarkedValue z = cell_at(rows, rr, c);
                if (z.marked ? carried < z : carried <= z) {
                    pos = rr;
                    break;
                }
            }
            if (pos == 0) throw InvalidPair("reverse column walk found no pivot");
            std::swap(carried, cell_at(rows, pos, c));
        }
    }

    for (int r = start_row; r >= 1; --r) {
        auto& row = rows[r - 1];
        int pos = -1;
        for (int i = static_cast<int>(row.size()) - 1; i >= 0; --i) {
            if (row[i].marked ? carried <= row[i] : carried < row[i]) {
                pos = i;
                break;
            }
        }
        if (pos == -1) throw InvalidPair("reverse row walk found no pivot");
        std::swap(carried, row[pos]);
    }
    return carried;
}

MarkedShiftedTableau build_tableau(Rows rows) {
    try {
        return MarkedShiftedTableau(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("insertion produced an invalid tableau: ") + e.what());
    }
}

}  // namespace

std::pair<MarkedShiftedTableau, MarkedShiftedTableau> knuth_forward(
    const MarkedMatrix& a, std::vector<InsertionRecord>* log) {
    const TwoLineArray e = knuth_encode(a);
    Rows s_rows, t_rows;
    for (std::size_t idx = 0; idx < e.top.size(); ++idx) {
        const InsertResult res = insert_value(s_rows, e.bottom[idx]);
        const auto [r, c] = res.cell;
        if (static_cast<int>(t_rows.size()) < r) t_rows.emplace_back();
        if (c != r + static_cast<int>(t_rows[r - 1].size()))
            throw std::logic_error("recording tableau grew off the end of a row");
        t_rows[r - 1].push_back({e.top[idx], res.primed});
        if (log) log->push_back({e.bottom[idx], e.top[idx], res.cell, res.primed});
    }
    return {build_tableau(std::move(s_rows)), build_tableau(std::move(t_rows))};
}

MarkedMatrix knuth_backward(const MarkedShiftedTableau& s, const MarkedShiftedTableau& t,
                            int min_rows, int min_cols) {
    if (s.shape() != t.shape()) throw InvalidPair("tableaux must have the same shape");
    if (!t.diagonal_unmarked()) throw InvalidPair("recording tableau has a marked diagonal");

    Rows rows;
    for (const auto& row : s.rows()) rows.push_back(row);

    // Creation order within one recorded magnitude is: primed cells by row
    // ascending, then unprimed cells by column ascending. Reversal walks the
    // opposite way, magnitudes ascending.
    std::map<std::pair<int, int>, MarkedValue> result;  // (i,j) -> accumulated entry
    std::set<std::pair<int, int>> closed;               // groups whose marked copy arrived
    int max_j = 0;
    for (int i = 1; i <= t.max_magnitude(); ++i) {
        std::vector<Cell> unprimed_cells, primed_cells;
        for (int r = 1; r <= t.row_count(); ++r) {
            for (int c = r; t.has_cell(r, c); ++c) {
                const MarkedValue v = t.at(r, c);
                if (v.magnitude != i) continue;
                (v.marked ? primed_cells : unprimed_cells).push_back({r, c});
            }
        }
        std::sort(unprimed_cells.begin(), unprimed_cells.end(),
                  [](const Cell& a, const Cell& b) { return a.second > b.second; });
        std::sort(primed_cells.begin(), primed_cells.end(),
                  [](const Cell& a, const Cell& b) { return a.first > b.first; });

        std::vector<std::pair<Cell, bool>> order;
        for (const Cell& cell : unprimed_cells) order.push_back({cell, false});
        for (const Cell& cell : primed_cells) order.push_back({cell, true});
        for (const auto& [cell, primed] : order) {
            const MarkedValue x = reverse_insert(rows, cell, primed);
            const std::pair<int, int> key{i, x.magnitude};
            if (closed.count(key))
                throw InvalidPair("matrix entry would receive a second marked copy");
            auto [it, inserted] = result.try_emplace(key, MarkedValue{0, false});
            ++it->second.magnitude;
            if (x.marked) {
                it->second.marked = true;
                closed.insert(key);
            }
            max_j = std::max(max_j, x.magnitude);
        }
    }
    if (!rows.empty()) throw InvalidPair("reversal left cells behind");

    MarkedMatrix out(std::max(min_rows, t.max_magnitude()), std::max(min_cols, max_j));
    for (const auto& [key, value] : result) out.set(key.first, key.second, value);
    return out;
}

}  // namespace planepart
