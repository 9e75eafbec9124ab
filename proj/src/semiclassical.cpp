#include "qsusp/semiclassical.hpp"

#include <stdexcept>

namespace qsusp {

ClassicalPoly dequantize(const NCPoly& f, const AlgebraPreset& A) {
    if (A.kind() != PresetKind::EvenSphere)
        throw std::invalid_argument("dequantize: EvenSphere preset required");
    const ClassicalVars vars(ClassicalKind::EvenSphereCoinduced, A.n());
    ClassicalPoly out;
    for (const auto& [w, c] : f.terms()) {
        Monomial m(static_cast<std::size_t>(vars.num_vars()), 0);
        for (GenCode g : w) m[g] += g == 0 ? 2 : 1;  // t counts half-steps
        out.add_term(m, c.eval(Rational(1)));
    }
    return out;
}

ClassicalPoly semiclassical_bracket(const NCPoly& f, const NCPoly& g, const AlgebraPreset& A) {
    const NCPoly comm = commutator(f, g, A);
    const ClassicalVars vars(ClassicalKind::EvenSphereCoinduced, A.n());
    ClassicalPoly out;
    for (const auto& [w, c] : comm.terms()) {
        const LaurentQ scaled = c.div_one_minus_q();
        Monomial m(static_cast<std::size_t>(vars.num_vars()), 0);
        for (GenCode gcode : w) m[gcode] += gcode == 0 ? 2 : 1;
        out.add_term(m, scaled.eval(Rational(1)));
    }
    return out;
}

std::vector<PairResidual> verify_semiclassical(int n) {
    const AlgebraPreset A = AlgebraPreset::even_sphere(n);
    const PoissonStructure P = PoissonStructure::even_sphere_coinduced(n);
    const ClassicalVars& cv = P.vars();

    std::vector<PairResidual> out;
    for (int u = 0; u < cv.num_vars(); ++u) {
        for (int v = u; v < cv.num_vars(); ++v) {
            // Generator codes and variable codes coincide.
            const NCPoly qf = NCPoly::generator(static_cast<GenCode>(u));
            const NCPoly qg = NCPoly::generator(static_cast<GenCode>(v));
            const ClassicalPoly lhs = P.reduce(semiclassical_bracket(qf, qg, A));
            const ClassicalPoly rhs =
                P.bracket(ClassicalPoly::variable(cv, u), ClassicalPoly::variable(cv, v));
            out.push_back({"{" + cv.name(u) + "," + cv.name(v) + "}", P.reduce(lhs - rhs)});
        }
    }
    return out;
}

}  // namespace qsusp
