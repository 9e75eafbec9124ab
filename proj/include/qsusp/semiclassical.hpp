#pragma once

#include "qsusp/classical.hpp"
#include "qsusp/ncpoly.hpp"
#include "qsusp/poisson.hpp"

namespace qsusp {

/// Basis correspondence from normal-form words over EvenSphere(n) to
/// commutative monomials (a_i -> a_i, a_i* -> abar_i, t -> t). Variable
/// codes mirror generator codes, so a word maps to its exponent counts.
ClassicalPoly dequantize(const NCPoly& f, const AlgebraPreset& A);

/// {f,g} = lim_{q->1} [f,g]/(1-q), computed exactly: commutator, exact
/// coefficient division by (1-q), evaluation at q = 1, dequantization.
/// Throws NotDivisibleError when a commutator coefficient lacks the
/// (1-q) factor, which would indicate a broken relation table.
ClassicalPoly semiclassical_bracket(const NCPoly& f, const NCPoly& g, const AlgebraPreset& A);

/// Residuals of semiclassical_bracket minus the coinduced Poisson bracket
/// over every generator pair, both sides reduced modulo the sphere
/// relation. All must vanish.
std::vector<PairResidual> verify_semiclassical(int n);

}  // namespace qsusp
