#pragma once

#include <complex>

#include "qsusp/fockrep.hpp"
#include "qsusp/ncmatrix.hpp"

namespace qsusp {

/// Entries of the diagonal scaler C_{2k}: entry j of the 2^k diagonal is
/// q^{1 + popcount(j)}, which is exactly the recursion
/// C_0 = q, C_{2(k+1)} = diag(C_{2k}, q C_{2k}).
LaurentQ diagonal_scaler_entry(int j);

/// The scaling automorphism x_i -> q^2 x_i, y -> q^2 y: every word picks up
/// q^{2 length}. It is an algebra map on the odd plane and deliberately
/// does not descend to the sphere quotient.
NCPoly scaling_automorphism(const NCPoly& f);

/// Recursive idempotent candidate e_{2k} over OddPlane(n), 0 <= k <= n:
///   e_0 = 1 - y,
///   e_{2(k+1)} = [[e_{2k}, C_{2k} x*_{k+1}], [C_{2k} x_{k+1}, 1 - phi(e_{2k})]].
NCMatrix build_e(int n, int k);

/// Residual of e_{2k} C_{2k} x*_l - C_{2k} x*_l phi(e_{2k}) for k < l <= n;
/// the zero matrix certifies the commutation lemma.
NCMatrix check_lemma_M(int n, int k, int l);

/// Residual of (e_{2k})^2 - e_{2k} - [q^2 sum_{i<=k} x_i* x_i - y(1-y)] q^{-2} (C_{2k})^2.
NCMatrix check_defect(int n, int k);

/// The projector G_{2n}: entries of e_{2n} pushed through the sphere
/// quotient (renormalized under the EvenSphere preset).
NCMatrix build_G(int n);

/// eps applied to Tr(G_{2n}); exactly 2^{n-1}.
Rational pair_epsilon(int n);

/// tr_sigma applied to Tr(G_{2n}); within the tail bound of -1.
TailBound pair_charge(int n, double q0, int N);

/// Cross-check via the represented diagonal blocks of G_{2n} (full matrix
/// route instead of the scalar trace polynomial).
TailBound pair_charge_matrix(int n, double q0, int N);

/// Classical idempotent at a numeric point of the even sphere.
struct ClassicalGResult {
    int dim = 1;
    std::vector<std::complex<double>> matrix;  // row-major
    double idempotency_error = 0.0;            // max |(G^2 - G)_{ij}|
    double trace = 0.0;                        // Re tr(G); imaginary part cancels
};

/// G_0 = 1 - t, G_{2(k+1)} = [[G_{2k}, a*_{k+1} I], [a_{k+1} I, 1 - G_{2k}]].
/// The point must satisfy sum |a_i|^2 = t(1-t) within 1e-12.
ClassicalGResult classical_G(int n, double t, const std::vector<std::complex<double>>& a);

}  // namespace qsusp
