#include "qsusp/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace qsusp {

namespace {

ClassicalKind vars_kind(PoissonKind k) {
    switch (k) {
        case PoissonKind::PodlesStandard:
        case PoissonKind::ProductPodles: return ClassicalKind::ProductPodles;
        case PoissonKind::EvenSphereCoinduced: return ClassicalKind::EvenSphereCoinduced;
        case PoissonKind::ChartPlane: return ClassicalKind::ChartPlane;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

PoissonStructure::PoissonStructure(PoissonKind kind, int n)
    : kind_(kind), vars_(vars_kind(kind), n) {}

PoissonStructure PoissonStructure::podles_standard() { return {PoissonKind::PodlesStandard, 1}; }
PoissonStructure PoissonStructure::product_podles(int n) { return {PoissonKind::ProductPodles, n}; }
PoissonStructure PoissonStructure::even_sphere_coinduced(int n) {
    return {PoissonKind::EvenSphereCoinduced, n};
}
PoissonStructure PoissonStructure::chart_plane(int n) { return {PoissonKind::ChartPlane, n}; }

// The table for u < v in code order; see generator_bracket for the
// antisymmetric closure. Conjugate-pair values follow the convention of a
// commutator-limit bracket: {fbar, gbar} = -conj({f, g}).
ClassicalPoly PoissonStructure::raw_pair_bracket(int u, int v) const {
    const int nv = vars_.num_vars();
    auto var = [&](int w) { return ClassicalPoly::variable(vars_, w); };
    auto zero = [&]() { return ClassicalPoly(); };
    auto scal = [&](long c) { return ClassicalPoly::scalar(nv, Rational(c)); };

    if (vars_.kind() == ClassicalKind::ProductPodles) {
        if (u / 3 != v / 3) return zero();  // distinct copies commute
        const int tau = 3 * (u / 3), abar = tau + 1, alpha = tau + 2;
        if (u == tau && v == abar) return Rational(-2) * (var(abar) * var(tau));
        if (u == tau && v == alpha) return Rational(2) * (var(alpha) * var(tau));
        // {alphabar, alpha} = 2 alpha alphabar - 2 tau^2
        return Rational(2) * (var(alpha) * var(abar)) - Rational(2) * (var(tau) * var(tau));
    }

    if (vars_.kind() == ClassicalKind::EvenSphereCoinduced) {
        auto abar = [](int i) { return 2 * i - 1; };
        auto a = [](int i) { return 2 * i; };
        if (u == 0) {
            // {t, abar_i} = -2 abar_i t ; {t, a_i} = 2 a_i t
            const Rational c = v % 2 == 1 ? Rational(-2) : Rational(2);
            return c * (var(v) * var(0));
        }
        const int iu = (u + 1) / 2, iv = (v + 1) / 2;
        const bool ustar = u % 2 == 1, vstar = v % 2 == 1;
        if (iu == iv) {
            // {abar_k, a_k} = 2 a_k abar_k - 2 t^2 - 2 sum_{l<k} a_l abar_l
            ClassicalPoly r = Rational(2) * (var(a(iu)) * var(abar(iu)));
            r -= Rational(2) * (var(0) * var(0));
            for (int l = 1; l < iu; ++l) r -= Rational(2) * (var(a(l)) * var(abar(l)));
            return r;
        }
        if (!ustar && !vstar) return var(u) * var(v);                       // {a_k, a_l}, k<l
        if (ustar && vstar) return Rational(-1) * (var(u) * var(v));        // {abar_k, abar_l}
        if (!ustar && vstar) return Rational(-3) * (var(u) * var(v));       // {a_k, abar_l}, k<l
        return Rational(3) * (var(u) * var(v));                             // {abar_k, a_l} = -{a_l, abar_k}
    }

    // ChartPlane
    const int iu = u / 2 + 1, iv = v / 2 + 1;
    const bool ustar = u % 2 == 1, vstar = v % 2 == 1;
    if (iu == iv) {
        // {z_k, zbar_k} = 2 (1 + sum_{l<=k} z_l zbar_l)
        ClassicalPoly r = scal(2);
        for (int l = 1; l <= iu; ++l)
            r += Rational(2) * (var(2 * (l - 1)) * var(2 * (l - 1) + 1));
        return r;
    }
    if (!ustar && !vstar) return var(u) * var(v);                 // {z_k, z_l}, k<l
    if (ustar && vstar) return Rational(-1) * (var(u) * var(v));  // {zbar_k, zbar_l}
    if (!ustar && vstar) return var(u) * var(v);                  // {z_k, zbar_l}, k != l
    return Rational(-1) * (var(u) * var(v));                      // {zbar_k, z_l}
}

ClassicalPoly PoissonStructure::generator_bracket(int u, int v) const {
    if (u == v) return {};
    if (u < v) return raw_pair_bracket(u, v);
    return -raw_pair_bracket(v, u);
}

namespace {

void require_vars(const ClassicalPoly& f, const ClassicalVars& vars) {
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        if (static_cast<int>(m.size()) != vars.num_vars())
            throw std::invalid_argument("PoissonStructure: variable mismatch");
    }
}

}  // namespace

ClassicalPoly PoissonStructure::reduce(const ClassicalPoly& f) const {
    require_vars(f, vars_);
    if (vars_.kind() == ClassicalKind::ChartPlane) return f;

    // Collect the substitution rules: (var pair) -> replacement polynomial.
    struct Rule {
        int u, v;
        ClassicalPoly replacement;
    };
    std::vector<Rule> rules;
    auto var = [&](int w) { return ClassicalPoly::variable(vars_, w); };

    if (vars_.kind() == ClassicalKind::ProductPodles) {
        for (int i = 0; i < vars_.n(); ++i) {
            const int tau = 3 * i, abar = tau + 1, alpha = tau + 2;
            rules.push_back({abar, alpha, var(tau) - var(tau) * var(tau)});
        }
    } else {
        const int n = vars_.n();
        ClassicalPoly repl = var(0) - var(0) * var(0);
        for (int i = 1; i < n; ++i) repl -= var(2 * i - 1) * var(2 * i);
        rules.push_back({2 * n - 1, 2 * n, std::move(repl)});
    }

    ClassicalPoly out;
    ClassicalPoly pending = f;
    while (!pending.is_zero()) {
        // Pop the first term and reduce it one step if possible.
        const auto it = pending.terms().begin();
        const Monomial m = it->first;
        const Rational c = it->second;
        pending.add_term(m, -c);

        const Rule* hit = nullptr;
        for (const auto& r : rules) {
            if (m[static_cast<std::size_t>(r.u)] >= 1 && m[static_cast<std::size_t>(r.v)] >= 1) {
                hit = &r;
                break;
            }
        }
        if (!hit) {
            out.add_term(m, c);
            continue;
        }
        Monomial base = m;
        base[static_cast<std::size_t>(hit->u)] -= 1;
        base[static_cast<std::size_t>(hit->v)] -= 1;
        pending += ClassicalPoly::monomial(std::move(base), c) * hit->replacement;
    }
    return out;
}

ClassicalPoly PoissonStructure::bracket(const ClassicalPoly& f, const ClassicalPoly& g) const {
    require_vars(f, vars_);
    require_vars(g, vars_);
    const int nv = vars_.num_vars();
    std::vector<ClassicalPoly> df(static_cast<std::size_t>(nv)), dg(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        df[static_cast<std::size_t>(v)] = f.derivative(vars_, v);
        dg[static_cast<std::size_t>(v)] = g.derivative(vars_, v);
    }
    ClassicalPoly r;
    for (int u = 0; u < nv; ++u) {
        for (int v = u + 1; v < nv; ++v) {
            const ClassicalPoly B = raw_pair_bracket(u, v);
            if (B.is_zero()) continue;
            const auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
            ClassicalPoly mixed = df[ui] * dg[vi] - df[vi] * dg[ui];
            if (mixed.is_zero()) continue;
            r += mixed * B;
        }
    }
    r = reduce(r);
    if (!r.exponents_nonnegative())
        throw std::logic_error("PoissonStructure::bracket: negative exponent survived");
    return r;
}

ClassicalPoly phi_pushforward(const ClassicalPoly& f, int n) {
    const ClassicalVars src(ClassicalKind::EvenSphereCoinduced, n);
    const ClassicalVars dst(ClassicalKind::ProductPodles, n);
    ClassicalPoly out;
    for (const auto& [m, c] : f.terms()) {
        if (static_cast<int>(m.size()) != src.num_vars())
            throw std::invalid_argument("phi_pushforward: variable set mismatch");
        Monomial im(static_cast<std::size_t>(dst.num_vars()), 0);
        const int t_half = m[0];
        for (int k = 1; k <= n; ++k) im[static_cast<std::size_t>(3 * (k - 1))] = t_half;
        for (int i = 1; i <= n; ++i) {
            const int ebar = m[static_cast<std::size_t>(2 * i - 1)];
            const int e = m[static_cast<std::size_t>(2 * i)];
            im[static_cast<std::size_t>(3 * (i - 1) + 1)] += ebar;
            im[static_cast<std::size_t>(3 * (i - 1) + 2)] += e;
            // tau_k picks up M_ik from every a_i / abar_i factor:
            // one full step for k > i, a half-step for k < i.
            for (int k = 1; k <= n; ++k) {
                if (k == i) continue;
                const int half_steps = k > i ? 2 : 1;
                im[static_cast<std::size_t>(3 * (k - 1))] += (e + ebar) * half_steps;
            }
        }
        out.add_term(im, c);
    }
    return out;
}

std::vector<PairResidual> verify_poisson_map(int n) {
    const PoissonStructure prod = PoissonStructure::product_podles(n);
    const PoissonStructure coind = PoissonStructure::even_sphere_coinduced(n);
    const ClassicalVars& cv = coind.vars();

    std::vector<ClassicalPoly> push(static_cast<std::size_t>(cv.num_vars()));
    for (int v = 0; v < cv.num_vars(); ++v)
        push[static_cast<std::size_t>(v)] = phi_pushforward(ClassicalPoly::variable(cv, v), n);

    std::vector<PairResidual> out;
    for (int u = 0; u < cv.num_vars(); ++u) {
        for (int v = u; v < cv.num_vars(); ++v) {
            const ClassicalPoly lhs = prod.bracket(push[static_cast<std::size_t>(u)],
                                                   push[static_cast<std::size_t>(v)]);
            const ClassicalPoly rhs = prod.reduce(phi_pushforward(
                coind.bracket(ClassicalPoly::variable(cv, u), ClassicalPoly::variable(cv, v)), n));
            out.push_back({"{" + cv.name(u) + "," + cv.name(v) + "}", prod.reduce(lhs - rhs)});
        }
    }
    return out;
}

ClassicalPoly verify_sphere_constraint(int n) {
    const ClassicalVars cv(ClassicalKind::EvenSphereCoinduced, n);
    const PoissonStructure prod = PoissonStructure::product_podles(n);
    ClassicalPoly modulus;
    for (int i = 1; i <= n; ++i)
        modulus += ClassicalPoly::variable(cv, 2 * i - 1) * ClassicalPoly::variable(cv, 2 * i);
    const ClassicalPoly t = ClassicalPoly::variable(cv, 0);
    modulus -= t - t * t;
    return prod.reduce(phi_pushforward(modulus, n));
}

std::vector<PairResidual> check_jacobi(const PoissonStructure& P) {
    const ClassicalVars& cv = P.vars();
    auto var = [&](int v) { return ClassicalPoly::variable(cv, v); };
    std::vector<PairResidual> out;
    for (int u = 0; u < cv.num_vars(); ++u) {
        for (int v = u + 1; v < cv.num_vars(); ++v) {
            for (int w = v + 1; w < cv.num_vars(); ++w) {
                ClassicalPoly J = P.bracket(var(u), P.bracket(var(v), var(w)));
                J += P.bracket(var(v), P.bracket(var(w), var(u)));
                J += P.bracket(var(w), P.bracket(var(u), var(v)));
                J = P.reduce(J);
                if (!J.is_zero())
                    out.push_back({"{" + cv.name(u) + "," + cv.name(v) + "," + cv.name(w) + "}", J});
            }
        }
    }
    return out;
}

StructureMatrixPoint structure_matrix(int n, const std::vector<std::complex<double>>& point) {
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("structure_matrix: point must have n complex entries");
    const PoissonStructure chart = PoissonStructure::chart_plane(n);
    // Variable order matches the w order: w_{2k-1} = z_k, w_{2k} = z_k*.
    std::vector<std::complex<double>> assignment(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        assignment[static_cast<std::size_t>(2 * i)] = point[static_cast<std::size_t>(i)];
        assignment[static_cast<std::size_t>(2 * i + 1)] = std::conj(point[static_cast<std::size_t>(i)]);
    }
    StructureMatrixPoint out;
    out.n = n;
    out.point = point;
    out.matrix.assign(static_cast<std::size_t>(2 * n) * (2 * n), 0.0);
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = i + 1; j < 2 * n; ++j) {
            const std::complex<double> val = chart.generator_bracket(i, j).eval(chart.vars(), assignment);
            out.matrix[static_cast<std::size_t>(i) * 2 * n + j] = val;
            out.matrix[static_cast<std::size_t>(j) * 2 * n + i] = -val;
        }
    }
    return out;
}

double pfaffian_recursive(int n, const std::vector<std::complex<double>>& point) {
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("pfaffian_recursive: point must have n complex entries");
    double sum = std::norm(point[0]);
    double pf = 2.0 * (1.0 + sum);
    for (int k = 2; k <= n; ++k) {
        sum += std::norm(point[static_cast<std::size_t>(k - 1)]);
        pf = 2.0 * pf * (1.0 + sum);
    }
    return pf;
}

std::complex<double> determinant(const std::vector<std::complex<double>>& matrix, int dim) {
    std::vector<std::complex<double>> a = matrix;
    auto at = [&](int i, int j) -> std::complex<double>& {
        return a[static_cast<std::size_t>(i) * dim + j];
    };
    std::complex<double> det = 1.0;
    for (int col = 0; col < dim; ++col) {
        int pivot = col;
        for (int r = col + 1; r < dim; ++r)
            if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
        if (std::abs(at(pivot, col)) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < dim; ++j) std::swap(at(pivot, j), at(col, j));
            det = -det;
        }
        det *= at(col, col);
        for (int r = col + 1; r < dim; ++r) {
            const std::complex<double> factor = at(r, col) / at(col, col);
            for (int j = col; j < dim; ++j) at(r, j) -= factor * at(col, j);
        }
    }
    return det;
}

}  // namespace qsusp
