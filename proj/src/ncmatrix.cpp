#include "qsusp/ncmatrix.hpp"

#include <stdexcept>

namespace qsusp {

NCMatrix& NCMatrix::operator+=(const NCMatrix& o) {
    if (size_ != o.size_) throw std::invalid_argument("NCMatrix: size mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

NCMatrix& NCMatrix::operator-=(const NCMatrix& o) {
    if (size_ != o.size_) throw std::invalid_argument("NCMatrix: size mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

bool NCMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

NCMatrix mul_serial(const NCMatrix& a, const NCMatrix& b, const AlgebraPreset& A) {
    if (a.size() != b.size()) throw std::invalid_argument("NCMatrix: size mismatch");
    const int s = a.size();
    NCMatrix out(s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            NCPoly acc;
            for (int k = 0; k < s; ++k) acc += mul(a.at(i, k), b.at(k, j), A);
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

NCMatrix mul(const NCMatrix& a, const NCMatrix& b, const AlgebraPreset& A) {
    if (a.size() != b.size()) throw std::invalid_argument("NCMatrix: size mismatch");
    const int s = a.size();
    NCMatrix out(s);
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            NCPoly acc;
            for (int k = 0; k < s; ++k) acc += mul(a.at(i, k), b.at(k, j), A);
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

NCPoly matrix_trace(const NCMatrix& m) {
    NCPoly t;
    for (int i = 0; i < m.size(); ++i) t += m.at(i, i);
    return t;
}

}  // namespace qsusp
