#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qsusp/classical.hpp"

namespace qsusp {

enum class PoissonKind { PodlesStandard, ProductPodles, EvenSphereCoinduced, ChartPlane };

/// Generator-pair bracket table plus relation-reduction rules, extended
/// bilinearly by Leibniz. All symbolic computation is exact.
class PoissonStructure {
public:
    static PoissonStructure podles_standard();
    static PoissonStructure product_podles(int n);
    static PoissonStructure even_sphere_coinduced(int n);
    static PoissonStructure chart_plane(int n);

    PoissonKind kind() const { return kind_; }
    int n() const { return vars_.n(); }
    const ClassicalVars& vars() const { return vars_; }

    /// {x_u, x_v} for generators; antisymmetric by construction.
    ClassicalPoly generator_bracket(int u, int v) const;

    /// Canonical representative modulo the ambient relations
    /// (alphabar alpha -> tau - tau^2 per copy, abar_n a_n -> sphere rule).
    ClassicalPoly reduce(const ClassicalPoly& f) const;

    /// Leibniz extension of the generator table, reduced.
    ClassicalPoly bracket(const ClassicalPoly& f, const ClassicalPoly& g) const;

private:
    PoissonStructure(PoissonKind kind, int n);
    ClassicalPoly raw_pair_bracket(int u, int v) const;  // u < v

    PoissonKind kind_;
    ClassicalVars vars_;
};

/// Pullback along the suspension map: a_i -> alpha_i prod tau_k^{M_ik},
/// t -> prod tau_i, with M_ik = 1 for i<k and 1/2 for k<i. Maps
/// EvenSphereCoinduced(n) polynomials into ProductPodles(n).
ClassicalPoly phi_pushforward(const ClassicalPoly& f, int n);

struct PairResidual {
    std::string pair;
    ClassicalPoly residual;
};

/// For every generator pair (u,v): bracket(phi*u, phi*v) on the product
/// sphere minus phi*({u,v} coinduced), reduced. All must vanish.
std::vector<PairResidual> verify_poisson_map(int n);

/// phi*(sum abar_i a_i) - phi*(t) + phi*(t)^2 reduced on the product sphere.
ClassicalPoly verify_sphere_constraint(int n);

/// Jacobi cyclic sum over all distinct generator triples, reduced.
std::vector<PairResidual> check_jacobi(const PoissonStructure& P);

/// 2n x 2n antisymmetric matrix S_ij = {w_i, w_j} evaluated at the point,
/// where w_{2k-1} = z_k and w_{2k} = z_k* (1-based).
struct StructureMatrixPoint {
    int n;
    std::vector<std::complex<double>> point;
    std::vector<std::complex<double>> matrix;  // row-major 2n x 2n

    std::complex<double> at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * 2 * n + j]; }
};

StructureMatrixPoint structure_matrix(int n, const std::vector<std::complex<double>>& point);

/// Pf(S^(n)) by the closed recursion Pf(S^(n)) = 2 Pf(S^(n-1)) (1 + sum_{l<=n} |z_l|^2),
/// Pf(S^(1)) = 2 (1 + |z_1|^2). Strictly positive.
double pfaffian_recursive(int n, const std::vector<std::complex<double>>& point);

/// LU determinant; the independent oracle for det(S) = Pf(S)^2.
std::complex<double> determinant(const std::vector<std::complex<double>>& matrix, int dim);

}  // namespace qsusp
