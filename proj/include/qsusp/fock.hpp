#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qsusp {

/// n-fold tensor power of the level-truncated Fock space. Basis vectors are
/// multi-indices (k_1,...,k_n) with 0 <= k_i < N, enumerated row-major with
/// the last index fastest.
struct TruncatedFock {
    int factors = 1;  // n
    int levels = 2;   // N

    TruncatedFock() = default;
    TruncatedFock(int n, int N) : factors(n), levels(N) {
        if (n < 1 || N < 2) throw std::invalid_argument("TruncatedFock: need n >= 1, N >= 2");
    }

    std::int64_t dim() const {
        std::int64_t d = 1;
        for (int i = 0; i < factors; ++i) d *= levels;
        return d;
    }

    std::int64_t flatten(const std::vector<int>& k) const {
        std::int64_t f = 0;
        for (int i = 0; i < factors; ++i) f = f * levels + k[static_cast<std::size_t>(i)];
        return f;
    }

    std::vector<int> unflatten(std::int64_t f) const {
        std::vector<int> k(static_cast<std::size_t>(factors));
        for (int i = factors - 1; i >= 0; --i) {
            k[static_cast<std::size_t>(i)] = static_cast<int>(f % levels);
            f /= levels;
        }
        return k;
    }

    friend bool operator==(const TruncatedFock& a, const TruncatedFock& b) {
        return a.factors == b.factors && a.levels == b.levels;
    }
};

/// Sparse operator on a truncated Fock space; no stored zeros. Entries are
/// 64-bit floats (generator matrices involve square roots).
class SparseOperator {
public:
    SparseOperator() = default;
    explicit SparseOperator(TruncatedFock space) : space_(space) {}

    static SparseOperator identity(TruncatedFock space);

    const TruncatedFock& space() const { return space_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::unordered_map<std::int64_t, double>& entries() const { return entries_; }

    double at(std::int64_t row, std::int64_t col) const {
        auto it = entries_.find(row * space_.dim() + col);
        return it == entries_.end() ? 0.0 : it->second;
    }

    void add_entry(std::int64_t row, std::int64_t col, double v);

    SparseOperator& operator+=(const SparseOperator& o);
    SparseOperator& operator-=(const SparseOperator& o);
    friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
    friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
    SparseOperator& operator*=(double c);
    friend SparseOperator operator*(double c, SparseOperator a) { return a *= c; }

    /// Matrix product this * other.
    SparseOperator mul(const SparseOperator& other) const;

    SparseOperator adjoint() const;

    std::vector<double> apply(const std::vector<double>& x) const;

    double trace() const;
    double max_abs_entry() const;

    /// Largest column norm over columns whose multi-index keeps every k_i
    /// below levels - margin (the truncation-safe subspace).
    double max_safe_column_norm(int margin) const;
    /// Serial reference for the kernel above.
    double max_safe_column_norm_serial(int margin) const;

private:
    bool column_is_safe(std::int64_t col, int margin) const;

    TruncatedFock space_;
    std::unordered_map<std::int64_t, double> entries_;
};

}  // namespace qsusp
