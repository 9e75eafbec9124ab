#include "qsusp/fock.hpp"

#include <algorithm>
#include <cmath>

namespace qsusp {

SparseOperator SparseOperator::identity(TruncatedFock space) {
    SparseOperator op(space);
    const std::int64_t d = space.dim();
    op.entries_.reserve(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i) op.entries_.emplace(i * d + i, 1.0);
    return op;
}

void SparseOperator::add_entry(std::int64_t row, std::int64_t col, double v) {
    if (v == 0.0) return;
    const std::int64_t key = row * space_.dim() + col;
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0.0) entries_.erase(it);
    }
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
    if (!(space_ == o.space_)) throw std::invalid_argument("SparseOperator: space mismatch");
    for (const auto& [key, v] : o.entries_) {
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            if (v != 0.0) entries_.emplace(key, v);
        } else {
            it->second += v;
            if (it->second == 0.0) entries_.erase(it);
        }
    }
    return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& o) {
    if (!(space_ == o.space_)) throw std::invalid_argument("SparseOperator: space mismatch");
    for (const auto& [key, v] : o.entries_) {
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            if (v != 0.0) entries_.emplace(key, -v);
        } else {
            it->second -= v;
            if (it->second == 0.0) entries_.erase(it);
        }
    }
    return *this;
}

SparseOperator& SparseOperator::operator*=(double c) {
    if (c == 0.0) {
        entries_.clear();
        return *this;
    }
    for (auto& [key, v] : entries_) v *= c;
    return *this;
}

SparseOperator SparseOperator::mul(const SparseOperator& other) const {
    if (!(space_ == other.space_)) throw std::invalid_argument("SparseOperator: space mismatch");
    const std::int64_t d = space_.dim();
    // Group the right factor by row for the k-contraction.
    std::unordered_map<std::int64_t, std::vector<std::pair<std::int64_t, double>>> by_row;
    by_row.reserve(other.entries_.size());
    for (const auto& [key, v] : other.entries_) by_row[key / d].emplace_back(key % d, v);

    SparseOperator out(space_);
    for (const auto& [key, va] : entries_) {
        const std::int64_t r = key / d, k = key % d;
        auto it = by_row.find(k);
        if (it == by_row.end()) continue;
        for (const auto& [c, vb] : it->second) out.add_entry(r, c, va * vb);
    }
    return out;
}

SparseOperator SparseOperator::adjoint() const {
    const std::int64_t d = space_.dim();
    SparseOperator out(space_);
    out.entries_.reserve(entries_.size());
    for (const auto& [key, v] : entries_) out.entries_.emplace((key % d) * d + key / d, v);
    return out;
}

std::vector<double> SparseOperator::apply(const std::vector<double>& x) const {
    const std::int64_t d = space_.dim();
    if (static_cast<std::int64_t>(x.size()) != d)
        throw std::invalid_argument("SparseOperator: vector dimension mismatch");
    std::vector<double> y(static_cast<std::size_t>(d), 0.0);
    for (const auto& [key, v] : entries_) {
        const double xc = x[static_cast<std::size_t>(key % d)];
        if (xc != 0.0) y[static_cast<std::size_t>(key / d)] += v * xc;
    }
    return y;
}

double SparseOperator::trace() const {
    const std::int64_t d = space_.dim();
    double t = 0.0;
    for (const auto& [key, v] : entries_)
        if (key / d == key % d) t += v;
    return t;
}

double SparseOperator::max_abs_entry() const {
    double m = 0.0;
    for (const auto& [key, v] : entries_) {
        (void)key;
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool SparseOperator::column_is_safe(std::int64_t col, int margin) const {
    const int bound = space_.levels - margin;
    for (int i = 0; i < space_.factors; ++i) {
        if (static_cast<int>(col % space_.levels) >= bound) return false;
        col /= space_.levels;
    }
    return true;
}

double SparseOperator::max_safe_column_norm_serial(int margin) const {
    const std::int64_t d = space_.dim();
    std::unordered_map<std::int64_t, double> col_sumsq;
    for (const auto& [key, v] : entries_) {
        const std::int64_t col = key % d;
        if (column_is_safe(col, margin)) col_sumsq[col] += v * v;
    }
    double worst = 0.0;
    for (const auto& [col, s] : col_sumsq) {
        (void)col;
        worst = std::max(worst, s);
    }
    return std::sqrt(worst);
}

double SparseOperator::max_safe_column_norm(int margin) const {
    const std::int64_t d = space_.dim();
    std::vector<std::pair<std::int64_t, double>> items;
    items.reserve(entries_.size());
    for (const auto& [key, v] : entries_) items.emplace_back(key % d, v);
    std::sort(items.begin(), items.end());

    double worst = 0.0;
#pragma omp parallel
    {
        double local = 0.0;
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(items.size()); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            // Only the first entry of each column segment scans the column.
            if (idx > 0 && items[idx - 1].first == items[idx].first) continue;
            const std::int64_t col = items[idx].first;
            if (!column_is_safe(col, margin)) continue;
            double sumsq = 0.0;
            for (std::size_t j = idx; j < items.size() && items[j].first == col; ++j)
                sumsq += items[j].second * items[j].second;
            local = std::max(local, sumsq);
        }
#pragma omp critical
        worst = std::max(worst, local);
    }
    return std::sqrt(worst);
}

}  // namespace qsusp
