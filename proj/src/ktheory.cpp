#include "qsusp/ktheory.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qsusp {

namespace {

LaurentQ qp(int k) { return LaurentQ::q_power(k); }

GenCode plane_star(int i) { return static_cast<GenCode>(2 * i - 1); }
GenCode plane_x(int i) { return static_cast<GenCode>(2 * i); }

}  // namespace

LaurentQ diagonal_scaler_entry(int j) {
    return qp(1 + std::popcount(static_cast<unsigned>(j)));
}

NCPoly scaling_automorphism(const NCPoly& f) {
    NCPoly out;
    for (const auto& [w, c] : f.terms())
        out.add_term(w, c * qp(2 * static_cast<int>(w.size())));
    return out;
}

NCMatrix build_e(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("build_e: need 0 <= k <= n");
    NCMatrix e(1);
    e.at(0, 0) = NCPoly::scalar(LaurentQ(1)) - NCPoly::generator(0);  // 1 - y
    for (int step = 0; step < k; ++step) {
        const int s = e.size();
        NCMatrix next(2 * s);
        const NCPoly xs = NCPoly::generator(plane_star(step + 1));
        const NCPoly x = NCPoly::generator(plane_x(step + 1));
        for (int i = 0; i < s; ++i) {
            for (int j = 0; j < s; ++j) next.at(i, j) = e.at(i, j);
            const LaurentQ c = diagonal_scaler_entry(i);
            next.at(i, s + i) = c * xs;
            next.at(s + i, i) = c * x;
            for (int j = 0; j < s; ++j) {
                NCPoly b = -scaling_automorphism(e.at(i, j));
                if (i == j) b += NCPoly::scalar(LaurentQ(1));
                next.at(s + i, s + j) = std::move(b);
            }
        }
        e = std::move(next);
    }
    return e;
}

NCMatrix check_lemma_M(int n, int k, int l) {
    if (!(k < l && l <= n && k >= 0)) throw std::out_of_range("check_lemma_M: need k < l <= n");
    const AlgebraPreset A = AlgebraPreset::odd_plane(n);
    const NCMatrix e = build_e(n, k);
    const int s = e.size();

    NCMatrix cx(s);       // C_{2k} x*_l
    NCMatrix phi_e(s);    // phi(e_{2k})
    for (int i = 0; i < s; ++i) {
        cx.at(i, i) = diagonal_scaler_entry(i) * NCPoly::generator(plane_star(l));
        for (int j = 0; j < s; ++j) phi_e.at(i, j) = scaling_automorphism(e.at(i, j));
    }
    return mul(e, cx, A) - mul(cx, phi_e, A);
}

NCMatrix check_defect(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("check_defect: need 0 <= k <= n");
    const AlgebraPreset A = AlgebraPreset::odd_plane(n);
    const NCMatrix e = build_e(n, k);
    const int s = e.size();

    // q^2 sum_{i<=k} x_i* x_i - y(1 - y), normalized once
    RawPoly raw;
    for (int i = 1; i <= k; ++i) raw.push_back({qp(2), Word{plane_star(i), plane_x(i)}});
    raw.push_back({LaurentQ(-1), Word{0}});
    raw.push_back({LaurentQ(1), Word{0, 0}});
    const NCPoly defect_scalar = normalize(raw, A);

    NCMatrix residual = mul(e, e, A) - e;
    for (int i = 0; i < s; ++i) {
        const LaurentQ c = qp(-2) * diagonal_scaler_entry(i) * diagonal_scaler_entry(i);
        residual.at(i, i) -= c * defect_scalar;
    }
    return residual;
}

NCMatrix build_G(int n) {
    if (n < 1) throw std::out_of_range("build_G: need n >= 1");
    const AlgebraPreset sphere = AlgebraPreset::even_sphere(n);
    const NCMatrix e = build_e(n, n);
    NCMatrix g(e.size());
    for (int i = 0; i < e.size(); ++i)
        for (int j = 0; j < e.size(); ++j)
            g.at(i, j) = normalize(e.at(i, j).raw(), sphere);  // quotient re-normalization
    return g;
}

Rational pair_epsilon(int n) {
    const LaurentQ eps = epsilon(matrix_trace(build_G(n)));
    if (!eps.is_constant()) throw std::logic_error("pair_epsilon: non-constant counit value");
    return eps.constant_value();
}

TailBound pair_charge(int n, double q0, int N) {
    const AlgebraPreset A = AlgebraPreset::even_sphere(n);
    return char_trace(matrix_trace(build_G(n)), A, q0, N);
}

TailBound pair_charge_matrix(int n, double q0, int N) {
    const AlgebraPreset A = AlgebraPreset::even_sphere(n);
    const NCMatrix g = build_G(n);
    TailBound out;
    for (int i = 0; i < g.size(); ++i) {
        const NCPoly& f = g.at(i, i);
        NCPoly centred = f;
        centred -= NCPoly::scalar(epsilon(f));
        out.value += represent(centred, A, q0, N).trace();
        out.bound += char_trace(f, A, q0, N).bound;
    }
    return out;
}

ClassicalGResult classical_G(int n, double t, const std::vector<std::complex<double>>& a) {
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("classical_G: need n coordinates");
    double modulus = 0.0;
    for (const auto& ai : a) modulus += std::norm(ai);
    if (std::abs(modulus - t * (1.0 - t)) > 1e-12)
        throw std::domain_error("classical_G: point is off the sphere");

    std::vector<std::complex<double>> g{std::complex<double>(1.0 - t)};
    int dim = 1;
    for (int k = 0; k < n; ++k) {
        const int nd = 2 * dim;
        std::vector<std::complex<double>> next(static_cast<std::size_t>(nd) * nd, 0.0);
        const std::complex<double> x = a[static_cast<std::size_t>(k)];
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                const std::complex<double> v = g[static_cast<std::size_t>(i) * dim + j];
                next[static_cast<std::size_t>(i) * nd + j] = v;
                next[static_cast<std::size_t>(dim + i) * nd + (dim + j)] = (i == j ? 1.0 : 0.0) - v;
            }
            next[static_cast<std::size_t>(i) * nd + (dim + i)] = std::conj(x);
            next[static_cast<std::size_t>(dim + i) * nd + i] = x;
        }
        g = std::move(next);
        dim = nd;
    }

    ClassicalGResult out;
    out.dim = dim;
    out.matrix = g;
    std::complex<double> tr = 0.0;
    for (int i = 0; i < dim; ++i) tr += g[static_cast<std::size_t>(i) * dim + i];
    out.trace = tr.real();

    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            std::complex<double> acc = 0.0;
            for (int k = 0; k < dim; ++k)
                acc += g[static_cast<std::size_t>(i) * dim + k] * g[static_cast<std::size_t>(k) * dim + j];
            acc -= g[static_cast<std::size_t>(i) * dim + j];
            worst = std::max(worst, std::abs(acc));
        }
    }
    out.idempotency_error = worst;
    return out;
}

}  // namespace qsusp
