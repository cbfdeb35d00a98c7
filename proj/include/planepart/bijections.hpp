#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planepart/plane_partition.hpp"
#include "planepart/tableau.hpp"

namespace planepart {

// ---- The Pi correspondence: strict plane partitions <-> same-shape pairs of
// unmarked shifted tableaux. The d-th diagonal of S (resp. T) carries the p
// (resp. q) Frobenius coordinates of the d-th horizontal slice of pp.

std::pair<ShiftedTableau, ShiftedTableau> pi_forward(const PlanePartition& pp);
PlanePartition pi_backward(const ShiftedTableau& s, const ShiftedTableau& t);

// ---- Markings. Each border component of an unmarked tableau admits exactly
// two valid markings; components meeting the main diagonal lose the marked
// option when diagonal marks are forbidden.

std::vector<MarkedShiftedTableau> enumerate_markings(const ShiftedTableau& s,
                                                     bool forbid_diagonal_marks);

// ---- Row/column insertion primitives on weakly decreasing vectors.
// bump replaces the leftmost entry strictly less than x; eqbump the leftmost
// entry less than or equal to x; both append when no entry qualifies.

struct BumpOutcome {
    std::optional<MarkedValue> bumped;
    int position = -1;  // 0-based index replaced, or -1 when appended
};

BumpOutcome bump(std::vector<MarkedValue>& v, MarkedValue x);
BumpOutcome eqbump(std::vector<MarkedValue>& v, MarkedValue x);

// ---- The adjusted shifted Knuth correspondence: matrices over the alphabet
// plus zero <-> same-shape pairs of marked shifted tableaux with unmarked
// diagonal on T.

struct TwoLineArray {
    std::vector<int> top;
    std::vector<MarkedValue> bottom;
    bool operator==(const TwoLineArray&) const = default;
};

// Pairs i-over-j repeated |a_ij| times, i from r down to 1 and j from c down
// to 1; for a marked entry the leftmost j carries the mark.
TwoLineArray knuth_encode(const MarkedMatrix& a);

struct InsertionRecord {
    MarkedValue inserted;
    int recorded = 0;  // the top-line value written into T
    Cell cell{0, 0};
    bool primed = false;
};

std::pair<MarkedShiftedTableau, MarkedShiftedTableau> knuth_forward(
    const MarkedMatrix& a, std::vector<InsertionRecord>* log = nullptr);

// Inverse of knuth_forward. The result is sized to cover all entries, or to
// the given minimum dimensions when larger.
MarkedMatrix knuth_backward(const MarkedShiftedTableau& s, const MarkedShiftedTableau& t,
                            int min_rows = 0, int min_cols = 0);

}  // namespace planepart
