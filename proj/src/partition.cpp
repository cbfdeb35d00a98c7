#include "planepart/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace planepart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition part " + std::to_string(i + 1) +
                                        " must be positive (trailing zeros are not stored)");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing at index " +
                                        std::to_string(i + 1));
    }
}

Partition Partition::from_parts_with_zeros(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

long long Partition::weight() const {
    long long w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("partition parts are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::is_strict() const {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] == parts_[i + 1]) return false;
    return true;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (part(i) < inner.part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    // outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    for (int i = 1; i <= outer.length(); ++i)
        if (inner.part(i) < outer.part(i + 1)) return false;
    return true;
}

FrobeniusCoords frobenius(const Partition& lambda) {
    FrobeniusCoords fc;
    const Partition conj = lambda.conjugate();
    for (int i = 1; lambda.part(i) >= i; ++i) {
        fc.p.push_back(lambda.part(i) - i + 1);
        fc.q.push_back(conj.part(i) - i + 1);
    }
    return fc;
}

Partition from_frobenius(const FrobeniusCoords& fc) {
    if (fc.p.size() != fc.q.size())
        throw std::invalid_argument("frobenius coordinates must have equal lengths");
    auto check_strict = [](const std::vector<int>& v, const char* name) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1)
                throw std::invalid_argument(std::string("frobenius ") + name +
                                            " coordinates must be positive");
            if (i + 1 < v.size() && v[i] <= v[i + 1])
                throw std::invalid_argument(std::string("frobenius ") + name +
                                            " coordinates must be strictly decreasing");
        }
    };
    check_strict(fc.p, "p");
    check_strict(fc.q, "q");

    const int d = fc.d();
    std::vector<int> parts;
    for (int i = 1; i <= d; ++i) parts.push_back(fc.p[i - 1] + i - 1);
    // Rows below the diagonal block come from the conjugate side: row i exists
    // for i in (d, q_j + j - 1] for each j, i.e. column heights q_j + j - 1.
    int max_row = d;
    for (int j = 1; j <= d; ++j) max_row = std::max(max_row, fc.q[j - 1] + j - 1);
    for (int i = d + 1; i <= max_row; ++i) {
        int row = 0;
        for (int j = 1; j <= d; ++j)
            if (fc.q[j - 1] + j - 1 >= i) ++row;
        if (row > 0) parts.push_back(row);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int max_parts, int max_weight) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> extend = [&](int budget, int bound) {
        out.emplace_back(Partition(current));
        if (static_cast<int>(current.size()) >= max_parts) return;
        for (int next = std::min(bound, budget); next >= 1; --next) {
            current.push_back(next);
            extend(budget - next, next);
            current.pop_back();
        }
    };
    extend(max_weight, max_weight);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() > b.parts();
    });
    return out;
}

}  // namespace planepart
