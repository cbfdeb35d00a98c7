#include "planepart/qt_series.hpp"

#include <sstream>
#include <stdexcept>

namespace planepart {

namespace {
const BigInt kZero(0);
}

QtSeries QtSeries::monomial(int q_deg, int t_deg, BigInt coeff) {
    if (q_deg < 0 || t_deg < 0) throw std::invalid_argument("qt monomial: negative degree");
    QtSeries s;
    if (coeff != 0) s.terms_[{q_deg, t_deg}] = std::move(coeff);
    return s;
}

QtSeries QtSeries::zero_truncated(int trunc) {
    QtSeries s;
    s.trunc_ = trunc;
    return s;
}

QtSeries QtSeries::one_truncated(int trunc) {
    QtSeries s(1);
    s.trunc_ = trunc;
    s.prune();
    return s;
}

const BigInt& QtSeries::coeff(int q_deg, int t_deg) const {
    auto it = terms_.find({q_deg, t_deg});
    return it == terms_.end() ? kZero : it->second;
}

QtSeries& QtSeries::operator+=(const QtSeries& other) {
    trunc_ = combine(trunc_, other.trunc_);
    for (const auto& [deg, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(deg, c);
        if (!inserted) it->second += c;
    }
    prune();
    return *this;
}

QtSeries& QtSeries::operator-=(const QtSeries& other) {
    trunc_ = combine(trunc_, other.trunc_);
    for (const auto& [deg, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(deg, BigInt(-c));
        if (!inserted) it->second -= c;
    }
    prune();
    return *this;
}

QtSeries QtSeries::operator*(const QtSeries& other) const {
    QtSeries out;
    out.trunc_ = combine(trunc_, other.trunc_);
    for (const auto& [da, ca] : terms_) {
        for (const auto& [db, cb] : other.terms_) {
            const int q = da.first + db.first;
            const int t = da.second + db.second;
            if (out.trunc_ != kExact && q + t > out.trunc_) continue;
            auto [it, inserted] = out.terms_.try_emplace(std::pair<int, int>{q, t}, BigInt(ca * cb));
            if (!inserted) it->second += ca * cb;
        }
    }
    out.prune();
    return out;
}

void QtSeries::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        const bool beyond = trunc_ != kExact && it->first.first + it->first.second > trunc_;
        if (beyond || it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial QtSeries::q0_slice() const {
    std::vector<BigInt> coeffs;
    for (const auto& [deg, c] : terms_) {
        if (deg.first != 0) continue;
        if (static_cast<int>(coeffs.size()) <= deg.second) coeffs.resize(deg.second + 1, BigInt(0));
        coeffs[deg.second] = c;
    }
    return Polynomial(std::move(coeffs));
}

std::string QtSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [deg, c] : terms_) {
        BigInt abs = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool has_var = deg.first > 0 || deg.second > 0;
        if (!has_var || abs != 1) out << abs.str();
        if (abs != 1 && has_var) out << "*";
        if (deg.first > 0) {
            out << "q";
            if (deg.first > 1) out << "^" << deg.first;
        }
        if (deg.second > 0) {
            if (deg.first > 0) out << "*";
            out << "t";
            if (deg.second > 1) out << "^" << deg.second;
        }
    }
    return out.str();
}

}  // namespace planepart
