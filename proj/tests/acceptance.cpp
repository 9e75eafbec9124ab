// Acceptance suite: every criterion at its stated tolerance, one line each.
// Exit status 0 iff all criteria pass.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "qsusp/confluence.hpp"
#include "qsusp/ktheory.hpp"
#include "qsusp/poisson.hpp"
#include "qsusp/semiclassical.hpp"

using namespace qsusp;

namespace {

int failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

void report(int id, bool pass, const char* label, double seconds) {
    std::printf("[%2d] %s  %s  (%.2fs)\n", id, pass ? "PASS" : "FAIL", label, seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

LaurentQ one_minus_q2() { return LaurentQ(1) - LaurentQ::q_power(2); }

NCPoly random_normal_poly(const AlgebraPreset& A, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), len(0, 6);
    std::uniform_int_distribution<int> code(0, A.num_codes() - 1);
    std::uniform_int_distribution<long> coeff(-4, 4);
    RawPoly raw;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Word w;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back(static_cast<GenCode>(code(rng)));
        raw.push_back({LaurentQ(coeff(rng)), std::move(w)});
    }
    return normalize(raw, A);
}

RawPoly random_raw(const AlgebraPreset& A, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), len(0, 6);
    std::uniform_int_distribution<int> code(0, A.num_codes() - 1);
    std::uniform_int_distribution<long> coeff(-4, 4);
    RawPoly raw;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Word w;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back(static_cast<GenCode>(code(rng)));
        raw.push_back({LaurentQ(coeff(rng)), std::move(w)});
    }
    return raw;
}

// 1. G(n)^2 = G(n) exactly for n = 1, 2, 3 in under 60 s.
void criterion_idempotency() {
    const double t0 = now_seconds();
    bool pass = true;
    for (int n = 1; n <= 3; ++n) {
        const AlgebraPreset A = AlgebraPreset::even_sphere(n);
        const NCMatrix g = build_G(n);
        pass = pass && (mul(g, g, A) - g).is_zero();
    }
    const double dt = now_seconds() - t0;
    pass = pass && dt < 60.0;
    report(1, pass, "symbolic idempotency: G(n)^2 - G(n) = 0 exactly, n = 1..3, < 60 s", dt);
}

// 2. Tr G = 2^{n-1} - (1-q^2)^n t and Tr e_{2k} = 2^{k-1} - (1-q^2)^k y exactly.
void criterion_traces() {
    const double t0 = now_seconds();
    bool pass = true;
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= n; ++k) {
            NCPoly expect = NCPoly::scalar(LaurentQ(1L << (k - 1)));
            expect -= one_minus_q2().pow(static_cast<unsigned>(k)) * NCPoly::generator(0);
            pass = pass && matrix_trace(build_e(n, k)) == expect;
        }
        NCPoly expect = NCPoly::scalar(LaurentQ(1L << (n - 1)));
        expect -= one_minus_q2().pow(static_cast<unsigned>(n)) * NCPoly::generator(0);
        pass = pass && matrix_trace(build_G(n)) == expect;
    }
    report(2, pass, "trace formulas exact: Tr e_{2k}, Tr G_{2n} in solved form, n <= 3",
           now_seconds() - t0);
}

// 3. pair_epsilon = 2^{n-1} exactly; pair_charge in [-1 - 1e-6, -1 + 1e-6]
//    for q0 in {0.3, 0.5, 0.8} (N = 60; N = 80 at q0 = 0.8), bound consistent.
void criterion_pairings() {
    const double t0 = now_seconds();
    bool pass = true;
    for (int n = 1; n <= 3; ++n) {
        pass = pass && pair_epsilon(n) == Rational(1L << (n - 1));
        for (double q0 : {0.3, 0.5, 0.8}) {
            const int N = q0 == 0.8 ? 80 : 60;
            const TailBound tb = pair_charge(n, q0, N);
            pass = pass && std::abs(tb.value + 1.0) <= 1e-6;
            pass = pass && tb.bound <= 1e-6;                      // bound justifies the window
            pass = pass && std::abs(tb.value + 1.0) <= tb.bound + 1e-9;  // and covers the value
        }
    }
    report(3, pass, "pairings: <eps, G> = 2^{n-1} exact, <tr_sigma, G> = -1 +/- 1e-6",
           now_seconds() - t0);
}

// 4. char_trace(1) = 0 exactly; |char_trace(t) - 1/(1-q0^2)^n| <= bound <= 1e-20
//    at q0 = 1/2, N = 40 (exact rational path).
void criterion_character() {
    const double t0 = now_seconds();
    bool pass = true;
    const Rational half(1, 2);
    for (int n = 1; n <= 3; ++n) {
        const AlgebraPreset A = AlgebraPreset::even_sphere(n);
        const TailBound one = char_trace(NCPoly::scalar(LaurentQ(1)), A, 0.5, 40);
        pass = pass && one.value == 0.0 && one.bound == 0.0;

        const TailBoundExact tb = char_trace_exact(NCPoly::generator(0), A, half, 40);
        const Rational target = Rational(4, 3).pow(n);  // 1/(1-q0^2)^n at q0 = 1/2
        Rational diff = tb.value - target;
        if (diff.sign() < 0) diff = -diff;
        pass = pass && diff.to_double() <= tb.bound;
        pass = pass && tb.bound <= 1e-20;
    }
    report(4, pass, "character values: tr(1) = 0 exactly, tr(t) = 1/(1-q^2)^n within <= 1e-20",
           now_seconds() - t0);
}

// 5. Lemma and defect identities exactly for all k < l <= n <= 3, k <= n <= 3.
void criterion_lemma_defect() {
    const double t0 = now_seconds();
    bool pass = true;
    for (int n = 1; n <= 3; ++n) {
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l <= n; ++l) pass = pass && check_lemma_M(n, k, l).is_zero();
        for (int k = 0; k <= n; ++k) pass = pass && check_defect(n, k).is_zero();
    }
    report(5, pass, "lemma and defect identities: exact zeros for all k < l <= n <= 3",
           now_seconds() - t0);
}

// 6. Representation relations: residual <= 1e-12 at q0 = 0.5 with margin 4.
void criterion_relations() {
    const double t0 = now_seconds();
    bool pass = true;
    pass = pass && verify_relations(AlgebraPreset::even_sphere(1), 0.5, 30, 4) <= 1e-12;
    pass = pass && verify_relations(AlgebraPreset::even_sphere(2), 0.5, 30, 4) <= 1e-12;
    pass = pass && verify_relations(AlgebraPreset::even_sphere(3), 0.5, 12, 4) <= 1e-12;
    report(6, pass, "representation relations: residual <= 1e-12 (N = 30/30/12, margin 4)",
           now_seconds() - t0);
}

// 7. Poisson map and sphere constraint: exact zeros for n = 2, 3.
void criterion_poisson_map() {
    const double t0 = now_seconds();
    bool pass = true;
    for (int n = 2; n <= 3; ++n) {
        for (const auto& r : verify_poisson_map(n)) pass = pass && r.residual.is_zero();
        pass = pass && verify_sphere_constraint(n).is_zero();
    }
    report(7, pass, "Poisson-map certification: exact zeros for n = 2, 3", now_seconds() - t0);
}

// 8. Semiclassical limit: exact zeros on all generator pairs, n <= 3.
void criterion_semiclassical() {
    const double t0 = now_seconds();
    bool pass = true;
    for (int n = 1; n <= 3; ++n)
        for (const auto& r : verify_semiclassical(n)) pass = pass && r.residual.is_zero();
    report(8, pass, "semiclassical limit: exact zeros on all generator pairs, n <= 3",
           now_seconds() - t0);
}

// 9. Pfaffian oracle: |det(S) - Pf^2| / |det| <= 1e-8 at 100 seeded points
//    per n <= 4; Pf > 0 everywhere.
void criterion_pfaffian() {
    const double t0 = now_seconds();
    bool pass = true;
    std::mt19937_64 rng(777001);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::complex<double>> pt(static_cast<std::size_t>(n));
            for (auto& z : pt) z = {coord(rng), coord(rng)};
            const double pf = pfaffian_recursive(n, pt);
            pass = pass && pf > 0.0;
            const auto S = structure_matrix(n, pt);
            const std::complex<double> det = determinant(S.matrix, 2 * n);
            pass = pass && std::abs(det - pf * pf) / std::abs(det) <= 1e-8;
        }
    }
    report(9, pass, "pfaffian oracle: det(S) = Pf^2 within 1e-8 at 100 points per n <= 4, Pf > 0",
           now_seconds() - t0);
}

// 10. psi^m Gram within 1e-10 of the identity and lowering residuals <= 1e-10
//     on the sum m_i <= 3 grid at n = 2, q0 = 0.5.
void criterion_psi() {
    const double t0 = now_seconds();
    bool pass = true;
    std::vector<std::vector<int>> grid;
    for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m1 + m2 <= 3; ++m2) grid.push_back({m1, m2});
    pass = pass && identity_deviation(psi_gram(grid, 2, 0.5, 16)) <= 1e-10;
    for (const auto& m : grid)
        for (int i = 1; i <= 2; ++i)
            pass = pass && lowering_coefficient_check(i, m, 0.5, 16) <= 1e-10;
    report(10, pass, "psi^m orthonormality <= 1e-10 and lowering residuals <= 1e-10, n = 2",
           now_seconds() - t0);
}

// 11. Rewriting soundness: empty confluence reports, strategy independence on
//     >= 1000 random expressions per preset, star/involution and
//     associativity exactly.
void criterion_rewriting() {
    const double t0 = now_seconds();
    bool pass = true;
    std::vector<AlgebraPreset> presets{AlgebraPreset::podles_sphere()};
    for (int n = 1; n <= 3; ++n) {
        presets.push_back(AlgebraPreset::even_sphere(n));
        presets.push_back(AlgebraPreset::odd_plane(n));
        presets.push_back(AlgebraPreset::podles_product(n));
    }
    for (std::size_t pi = 0; pi < presets.size(); ++pi) {
        const AlgebraPreset& A = presets[pi];
        pass = pass && check_local_confluence(A).ok();

        bool strategies_agree = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : strategies_agree)
        for (int trial = 0; trial < 1000; ++trial) {
            std::mt19937_64 rng(0x51a7e5u + 7919u * static_cast<unsigned>(pi) +
                                static_cast<unsigned>(trial));
            const RawPoly raw = random_raw(A, rng);
            strategies_agree = strategies_agree &&
                               normalize(raw, A, Strategy::LeftmostFirst) ==
                                   normalize(raw, A, Strategy::RightmostFirst);
        }
        pass = pass && strategies_agree;

        std::mt19937_64 rng(4242 + static_cast<unsigned>(pi));
        for (int trial = 0; trial < 60; ++trial) {
            const NCPoly f = random_normal_poly(A, rng), g = random_normal_poly(A, rng),
                         h = random_normal_poly(A, rng);
            pass = pass && star(star(f, A), A) == f;
            pass = pass && star(mul(f, g, A), A) == mul(star(g, A), star(f, A), A);
            pass = pass && mul(mul(f, g, A), h, A) == mul(f, mul(g, h, A), A);
        }
    }
    report(11, pass,
           "rewriting soundness: confluence, strategy independence (1000/preset), star, assoc",
           now_seconds() - t0);
}

// 12. Classical oracle: ||G^2 - G|| <= 1e-12 and trace = 2^{n-1} at 50 seeded
//     on-sphere points per n <= 3; quantum trace at q = 1 matches.
void criterion_classical() {
    const double t0 = now_seconds();
    bool pass = true;
    std::mt19937_64 rng(424243);
    std::uniform_real_distribution<double> tdist(0.05, 0.95), u(-1.0, 1.0);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const double t = tdist(rng);
            std::vector<std::complex<double>> a(static_cast<std::size_t>(n));
            double norm2 = 0.0;
            for (auto& ai : a) {
                ai = {u(rng), u(rng)};
                norm2 += std::norm(ai);
            }
            const double scale = std::sqrt(t * (1.0 - t) / norm2);
            for (auto& ai : a) ai *= scale;
            const auto res = classical_G(n, t, a);
            pass = pass && res.idempotency_error <= 1e-12;
            pass = pass && std::abs(res.trace - static_cast<double>(1L << (n - 1))) <= 1e-12;
        }
        // quantum trace at q = 1 collapses to the classical rank
        const NCPoly tr = matrix_trace(build_G(n));
        for (const auto& [w, c] : tr.terms()) {
            if (w.empty())
                pass = pass && c.eval(Rational(1)) == Rational(1L << (n - 1));
            else
                pass = pass && c.eval(Rational(1)) == Rational(0);
        }
    }
    report(12, pass, "classical oracle: ||G^2 - G|| <= 1e-12, trace = 2^{n-1}, q = 1 match",
           now_seconds() - t0);
}

}  // namespace

int main() {
    criterion_idempotency();
    criterion_traces();
    criterion_pairings();
    criterion_character();
    criterion_lemma_defect();
    criterion_relations();
    criterion_poisson_map();
    criterion_semiclassical();
    criterion_pfaffian();
    criterion_psi();
    criterion_rewriting();
    criterion_classical();
    std::printf("ACCEPTANCE: %d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
