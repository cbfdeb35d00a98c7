#include "planepart/components.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "planepart/errors.hpp"

namespace planepart {

namespace {

constexpr int kDirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// Flood fill over support cells, joining cells for which `joined` holds;
// labels follow discovery order scanning rows left to right, so components
// come out ordered by their topmost-leftmost cell.
template <typename Joined>
std::vector<std::vector<int>> label_components(const PlanePartition& pp, Joined joined,
                                               int& count) {
    std::vector<std::vector<int>> id;
    for (const auto& row : pp.rows()) id.emplace_back(row.size(), -1);
    count = 0;
    for (int i = 1; i <= pp.row_count(); ++i) {
        for (int j = 1; pp.in_support(i, j); ++j) {
            if (id[i - 1][j - 1] != -1) continue;
            const int label = count++;
            std::vector<Cell> stack{{i, j}};
            id[i - 1][j - 1] = label;
            while (!stack.empty()) {
                auto [ci, cj] = stack.back();
                stack.pop_back();
                for (const auto& d : kDirs) {
                    const int ni = ci + d[0], nj = cj + d[1];
                    if (!pp.in_support(ni, nj) || id[ni - 1][nj - 1] != -1) continue;
                    if (!joined(ci, cj, ni, nj)) continue;
                    id[ni - 1][nj - 1] = label;
                    stack.push_back({ni, nj});
                }
            }
        }
    }
    return id;
}

// Rhombus components of the right-facing vertical faces on diagonal m >= 0.
// A face at cell (i, i+m), height h projects to vertical slot v = h - i; two
// faces in the same column merge when their slots differ by at most 2 (direct
// contact, or a single white rhombus between them).
long long right_column_components(const PlanePartition& pp, int m) {
    std::set<int, std::greater<int>> slots;
    for (int i = 1; pp.in_support(i, i + m); ++i) {
        const int top = pp.entry(i, i + m);
        const int bottom = pp.entry(i, i + m + 1);
        for (int h = bottom + 1; h <= top; ++h) slots.insert(h - i);
    }
    long long components = 0;
    int prev = 0;
    bool have_prev = false;
    for (int v : slots) {
        if (!have_prev || prev - v > 2) ++components;
        prev = v;
        have_prev = true;
    }
    return components;
}

}  // namespace

std::map<int, long long> ComponentAnalysis::a_factors() const {
    std::map<int, long long> factors;
    for (const auto& comp : components)
        for (const auto& [lvl, n] : comp.n_profile) factors[lvl] += n;
    return factors;
}

Polynomial ComponentAnalysis::a_polynomial() const {
    Polynomial result(1);
    for (const auto& [lvl, n] : a_factors()) result *= Polynomial::one_minus_power(lvl).pow(n);
    return result;
}

ComponentAnalysis analyze(const PlanePartition& pp) {
    ComponentAnalysis out;
    out.component_id = label_components(
        pp, [&](int i, int j, int ni, int nj) { return pp.entry(i, j) == pp.entry(ni, nj); },
        out.k);

    out.level.clear();
    for (const auto& row : pp.rows()) out.level.emplace_back(row.size(), 0);
    for (int i = 1; i <= pp.row_count(); ++i) {
        for (int j = 1; pp.in_support(i, j); ++j) {
            const int comp = out.component_id[i - 1][j - 1];
            int h = 1;
            while (pp.in_support(i + h, j + h) &&
                   out.component_id[i + h - 1][j + h - 1] == comp)
                ++h;
            out.level[i - 1][j - 1] = h;
        }
    }

    out.components.resize(out.k);
    for (int i = 1; i <= pp.row_count(); ++i) {
        for (int j = 1; pp.in_support(i, j); ++j) {
            auto& comp = out.components[out.component_id[i - 1][j - 1]];
            comp.value = pp.entry(i, j);
            comp.cells.push_back({i, j});
        }
    }

    // Border components: flood fill restricted to equal (component, level).
    int border_count = 0;
    const auto border_id = label_components(
        pp,
        [&](int i, int j, int ni, int nj) {
            return out.component_id[i - 1][j - 1] == out.component_id[ni - 1][nj - 1] &&
                   out.level[i - 1][j - 1] == out.level[ni - 1][nj - 1];
        },
        border_count);
    std::vector<int> border_owner(border_count, -1);
    std::vector<BorderComponent> borders(border_count);
    for (int i = 1; i <= pp.row_count(); ++i) {
        for (int j = 1; pp.in_support(i, j); ++j) {
            const int b = border_id[i - 1][j - 1];
            border_owner[b] = out.component_id[i - 1][j - 1];
            borders[b].level = out.level[i - 1][j - 1];
            borders[b].cells.push_back({i, j});
        }
    }
    for (int b = 0; b < border_count; ++b) {
        auto& comp = out.components[border_owner[b]];
        comp.border_components.push_back(std::move(borders[b]));
        ++comp.n_profile[comp.border_components.back().level];
    }
    return out;
}

Polynomial a_poly(const PlanePartition& pp) { return analyze(pp).a_polynomial(); }

BigInt a_at_minus_one(const PlanePartition& pp) { return a_poly(pp).eval(BigInt(-1)); }

RhombusCount k_via_rhombi(const PlanePartition& pp) {
    if (!is_strict(pp)) throw std::invalid_argument("k_via_rhombi requires a strict plane partition");
    RhombusCount out;
    for (int m = 0; m <= pp.col_count() - 1; ++m) out.b += right_column_components(pp, m);
    const PlanePartition t = pp.transpose();
    for (int m = 0; m <= t.col_count() - 1; ++m) out.g += right_column_components(t, m);
    const long long diag_len = diagonals(pp).diagonals.empty()
                                   ? 0
                                   : diagonals(pp).at(0).length();
    out.k = out.b + out.g - diag_len;
    return out;
}

}  // namespace planepart
