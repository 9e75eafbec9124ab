#pragma once

#include <vector>

#include "qsusp/fock.hpp"
#include "qsusp/ncpoly.hpp"

namespace qsusp {

/// (alpha; q)_s = prod_{j=1..s} (1 - q^{j-1} alpha), with (alpha; q)_0 = 1.
double q_pochhammer(double alpha, double q0, int s);

/// A trace value together with a rigorous upper bound on the truncation
/// error (geometric tails per tensor slot).
struct TailBound {
    double value = 0.0;
    double bound = 0.0;
};

enum class PodlesOp { Alpha, AlphaStar, Tau, SqrtTau };

/// The irreducible Podles-sphere representation on one truncated factor:
///   sigma(alpha)|k> = q^{k-1} (1-q^{2k})^{1/2} |k-1>,  sigma(tau)|k> = q^{2k}|k>,
/// sigma(tau^{1/2}) the positive diagonal square root, sigma(alpha*) the adjoint.
SparseOperator sigma1(PodlesOp sym, double q0, int N);

/// sigma_n of one normal word over EvenSphere(n): a_i acts as alpha in slot
/// i, tau in slots k > i and tau^{1/2} in slots k < i; t acts as tau in
/// every slot. Column-parallel kernel plus a serial reference.
SparseOperator represent_word(const Word& w, const AlgebraPreset& A, double q0, int N);
SparseOperator represent_word_serial(const Word& w, const AlgebraPreset& A, double q0, int N);

SparseOperator represent(const NCPoly& f, const AlgebraPreset& A, double q0, int N);
SparseOperator represent_raw(const RawPoly& raw, const AlgebraPreset& A, double q0, int N);

/// Applies sigma_n(word) to a vector without materializing the matrix.
std::vector<double> apply_word(const Word& w, const AlgebraPreset& A, double q0, int N,
                               const std::vector<double>& x);

/// tr(sigma_n(f - eps(f) 1)) on the truncation; the scalar part is removed
/// symbolically so tr_sigma(1) = 0 holds exactly. The trace itself is
/// computed per tensor slot (the trace of a Kronecker product factorizes),
/// and the bound dominates the discarded infinite tail.
TailBound char_trace(const NCPoly& f, const AlgebraPreset& A, double q0, int N);

/// Exact-rational variant: on diagonal paths the square-root factors pair
/// up edge by edge, so every truncated trace is rational in q0. The bound
/// stays a float.
struct TailBoundExact {
    Rational value;
    double bound = 0.0;
};
TailBoundExact char_trace_exact(const NCPoly& f, const AlgebraPreset& A, const Rational& q0, int N);

/// Max over the defining relations of A and over truncation-safe basis
/// vectors v (every k_i < N - margin) of ||(sigma_n(L) - sigma_n(R)) v||.
double verify_relations(const AlgebraPreset& A, double q0, int N, int margin);

/// Residual of the closed-form lowering coefficient:
/// sigma(a_i) prod_j sigma(a_j*)^{m_j} |0> against
/// q^{3 sum_{j<i} m_j} q^{4 sum_{j>i} m_j} q^{2(m_i-1)} (1-q^{2 m_i})
/// times the vector with m_i lowered. Ordered products run left to right
/// in increasing index.
double lowering_coefficient_check(int i, const std::vector<int>& m, double q0, int N);

/// Gram matrix (row-major) of the normalized vectors
/// psi^m = C^m prod_i sigma(a_i*)^{m_i} |0>,
/// C^m = q^{-(sum m_i)^2 + sum m_i (m_i+1)/2} prod_i (q^2; q^2)_{m_i}^{-1/2}.
std::vector<double> psi_gram(const std::vector<std::vector<int>>& m_list, int n, double q0, int N);

/// Max |G - I| entry of a row-major square matrix.
double identity_deviation(const std::vector<double>& gram);

}  // namespace qsusp
