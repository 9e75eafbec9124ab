#pragma once

#include <vector>

#include "qsusp/ncpoly.hpp"

namespace qsusp {

/// Square matrix with NCPoly entries over one fixed preset. Products
/// renormalize entrywise; entry computations are independent, so the
/// product kernel is column-parallel with a serial reference.
class NCMatrix {
public:
    explicit NCMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * size) {}

    static NCMatrix identity(int size) {
        NCMatrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = NCPoly::scalar(LaurentQ(1));
        return m;
    }

    int size() const { return size_; }
    NCPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * size_ + j]; }
    const NCPoly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * size_ + j]; }

    NCMatrix& operator+=(const NCMatrix& o);
    NCMatrix& operator-=(const NCMatrix& o);
    friend NCMatrix operator+(NCMatrix a, const NCMatrix& b) { return a += b; }
    friend NCMatrix operator-(NCMatrix a, const NCMatrix& b) { return a -= b; }

    bool is_zero() const;
    friend bool operator==(const NCMatrix& a, const NCMatrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }

private:
    int size_;
    std::vector<NCPoly> entries_;
};

NCMatrix mul(const NCMatrix& a, const NCMatrix& b, const AlgebraPreset& A);
NCMatrix mul_serial(const NCMatrix& a, const NCMatrix& b, const AlgebraPreset& A);

/// Sum of the diagonal entries (already in normal form).
NCPoly matrix_trace(const NCMatrix& m);

}  // namespace qsusp
