#include "qsusp/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "qsusp/confluence.hpp"
#include "qsusp/ktheory.hpp"
#include "qsusp/ncpoly.hpp"
#include "qsusp/poisson.hpp"
#include "qsusp/semiclassical.hpp"

namespace qsusp {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CaseResult make_case(const std::string& id, bool pass, double residual, double t,
                     const std::string& note = "") {
    return CaseResult{id, pass, residual, t, note};
}

VerificationReport suite_confluence(const VerifyOptions& opt) {
    VerificationReport rep{"confluence", {}};
    struct Entry {
        std::string id;
        AlgebraPreset preset;
    };
    std::vector<Entry> presets{{"podles-sphere", AlgebraPreset::podles_sphere()},
                               {"podles-product", AlgebraPreset::podles_product(opt.n)},
                               {"even-sphere", AlgebraPreset::even_sphere(opt.n)},
                               {"odd-plane", AlgebraPreset::odd_plane(opt.n)}};
    for (const auto& e : presets) {
        Timer t;
        const auto r = check_local_confluence(e.preset);
        rep.cases.push_back(make_case(e.id, r.ok(), static_cast<double>(r.failures.size()),
                                      t.seconds(),
                                      std::to_string(r.overlaps_checked) + " overlaps"));
    }
    rep.sort_by_id();
    return rep;
}

VerificationReport suite_jacobi(const VerifyOptions& opt) {
    VerificationReport rep{"jacobi", {}};
    struct Entry {
        std::string id;
        PoissonStructure s;
    };
    std::vector<Entry> structures{{"podles-standard", PoissonStructure::podles_standard()},
                                  {"product-podles", PoissonStructure::product_podles(opt.n)},
                                  {"coinduced", PoissonStructure::even_sphere_coinduced(opt.n)},
                                  {"chart-plane", PoissonStructure::chart_plane(opt.n)}};
    for (const auto& e : structures) {
        Timer t;
        const auto failures = check_jacobi(e.s);
        rep.cases.push_back(
            make_case(e.id, failures.empty(), static_cast<double>(failures.size()), t.seconds()));
    }
    rep.sort_by_id();
    return rep;
}

VerificationReport suite_poisson_map(const VerifyOptions& opt) {
    VerificationReport rep{"poisson-map", {}};
    Timer t;
    const ClassicalVars product_vars(ClassicalKind::ProductPodles, opt.n);
    for (const auto& r : verify_poisson_map(opt.n)) {
        rep.cases.push_back(
            make_case(r.pair, r.residual.is_zero(), 0.0, 0.0, r.residual.str(product_vars)));
        rep.cases.back().runtime_s = t.seconds();
    }
    rep.sort_by_id();
    return rep;
}

VerificationReport suite_constraint(const VerifyOptions& opt) {
    VerificationReport rep{"constraint", {}};
    Timer t;
    const auto res = verify_sphere_constraint(opt.n);
    rep.cases.push_back(make_case("sum |a_i|^2 - t(1-t)", res.is_zero(), 0.0, t.seconds()));
    return rep;
}

VerificationReport suite_semiclassical(const VerifyOptions& opt) {
    VerificationReport rep{"semiclassical", {}};
    Timer t;
    const ClassicalVars sphere_vars(ClassicalKind::EvenSphereCoinduced, opt.n);
    for (const auto& r : verify_semiclassical(opt.n)) {
        rep.cases.push_back(
            make_case(r.pair, r.residual.is_zero(), 0.0, 0.0, r.residual.str(sphere_vars)));
        rep.cases.back().runtime_s = t.seconds();
    }
    rep.sort_by_id();
    return rep;
}

VerificationReport suite_relations(const VerifyOptions& opt) {
    VerificationReport rep{"relations", {}};
    Timer t;
    const double res = verify_relations(AlgebraPreset::even_sphere(opt.n), opt.q0, opt.trunc, opt.margin);
    rep.cases.push_back(make_case("even-sphere relations", res <= 1e-12, res, t.seconds()));
    return rep;
}

VerificationReport suite_lowering(const VerifyOptions& opt) {
    VerificationReport rep{"lowering", {}};
    std::vector<std::vector<int>> grid;
    std::vector<int> m(static_cast<std::size_t>(opt.n), 0);
    // all multi-indices with sum <= 3
    const int cap = 3;
    while (true) {
        int total = 0;
        for (int v : m) total += v;
        if (total <= cap) grid.push_back(m);
        int i = opt.n - 1;
        while (i >= 0) {
            if (++m[static_cast<std::size_t>(i)] > cap) {
                m[static_cast<std::size_t>(i)] = 0;
                --i;
            } else {
                break;
            }
        }
        if (i < 0) break;
    }
    for (int i = 1; i <= opt.n; ++i) {
        Timer t;
        double worst = 0.0;
        for (const auto& mm : grid)
            worst = std::max(worst, lowering_coefficient_check(i, mm, opt.q0, opt.trunc));
        rep.cases.push_back(make_case("a" + std::to_string(i) + " lowering", worst <= 1e-10, worst,
                                      t.seconds()));
    }
    rep.sort_by_id();
    return rep;
}

VerificationReport suite_gram(const VerifyOptions& opt) {
    VerificationReport rep{"gram", {}};
    Timer t;
    std::vector<std::vector<int>> grid;
    std::vector<int> m(static_cast<std::size_t>(opt.n), 0);
    const int cap = 3;
    while (true) {
        int total = 0;
        for (int v : m) total += v;
        if (total <= cap) grid.push_back(m);
        int i = opt.n - 1;
        while (i >= 0) {
            if (++m[static_cast<std::size_t>(i)] > cap) {
                m[static_cast<std::size_t>(i)] = 0;
                --i;
            } else {
                break;
            }
        }
        if (i < 0) break;
    }
    const double dev = identity_deviation(psi_gram(grid, opt.n, opt.q0, opt.trunc));
    rep.cases.push_back(make_case("psi gram identity", dev <= 1e-10, dev, t.seconds(),
                                  std::to_string(grid.size()) + " vectors"));
    return rep;
}

VerificationReport suite_lemma(const VerifyOptions& opt) {
    VerificationReport rep{"lemma", {}};
    for (int k = 0; k < opt.n; ++k) {
        for (int l = k + 1; l <= opt.n; ++l) {
            Timer t;
            const bool pass = check_lemma_M(opt.n, k, l).is_zero();
            rep.cases.push_back(make_case(
                "M(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")", pass, 0.0, t.seconds()));
        }
    }
    rep.sort_by_id();
    return rep;
}

VerificationReport suite_defect(const VerifyOptions& opt) {
    VerificationReport rep{"defect", {}};
    for (int k = 0; k <= opt.n; ++k) {
        Timer t;
        const bool pass = check_defect(opt.n, k).is_zero();
        rep.cases.push_back(make_case("defect(k=" + std::to_string(k) + ")", pass, 0.0, t.seconds()));
    }
    rep.sort_by_id();
    return rep;
}

VerificationReport suite_idempotency(const VerifyOptions& opt) {
    VerificationReport rep{"idempotency", {}};
    Timer t;
    const AlgebraPreset A = AlgebraPreset::even_sphere(opt.n);
    const NCMatrix g = build_G(opt.n);
    const bool pass = (mul(g, g, A) - g).is_zero();
    rep.cases.push_back(make_case("G^2 - G", pass, 0.0, t.seconds()));
    return rep;
}

VerificationReport suite_traces(const VerifyOptions& opt) {
    VerificationReport rep{"traces", {}};
    const LaurentQ one_minus_q2 = LaurentQ(1) - LaurentQ::q_power(2);
    for (int k = 1; k <= opt.n; ++k) {
        Timer t;
        NCPoly expect = NCPoly::scalar(LaurentQ(1L << (k - 1)));
        expect -= one_minus_q2.pow(static_cast<unsigned>(k)) * NCPoly::generator(0);
        const bool pass = matrix_trace(build_e(opt.n, k)) == expect;
        rep.cases.push_back(make_case("Tr e(k=" + std::to_string(k) + ")", pass, 0.0, t.seconds()));
    }
    Timer t;
    NCPoly expect = NCPoly::scalar(LaurentQ(1L << (opt.n - 1)));
    expect -= one_minus_q2.pow(static_cast<unsigned>(opt.n)) * NCPoly::generator(0);
    rep.cases.push_back(
        make_case("Tr G", matrix_trace(build_G(opt.n)) == expect, 0.0, t.seconds()));
    rep.sort_by_id();
    return rep;
}

VerificationReport suite_pairings(const VerifyOptions& opt) {
    VerificationReport rep{"pairings", {}};
    {
        Timer t;
        const Rational eps = pair_epsilon(opt.n);
        const bool pass = eps == Rational(1L << (opt.n - 1));
        rep.cases.push_back(make_case("epsilon pairing", pass, 0.0, t.seconds(), eps.str()));
    }
    {
        Timer t;
        const TailBound tb = pair_charge(opt.n, opt.q0, opt.trunc);
        const bool pass = std::abs(tb.value + 1.0) <= 1e-6 && tb.bound <= 1e-6;
        rep.cases.push_back(make_case("charge pairing", pass, tb.bound, t.seconds(),
                                      "value " + std::to_string(tb.value)));
    }
    if (opt.exact_q) {
        Timer t;
        const AlgebraPreset A = AlgebraPreset::even_sphere(opt.n);
        const TailBoundExact tb =
            char_trace_exact(matrix_trace(build_G(opt.n)), A, opt.q0_exact, opt.trunc);
        Rational diff = tb.value + Rational(1);
        if (diff.sign() < 0) diff = -diff;
        const bool pass = diff <= Rational(1, 1000000) && tb.bound <= 1e-6;
        rep.cases.push_back(make_case("charge pairing (exact q)", pass, tb.bound, t.seconds(),
                                      "value " + tb.value.str()));
    }
    return rep;
}

VerificationReport suite_pfaffian(const VerifyOptions& opt) {
    VerificationReport rep{"pfaffian", {}};
    Timer t;
    if (!opt.point.empty()) {
        if (static_cast<int>(opt.point.size()) != opt.n)
            throw std::invalid_argument("pfaffian: point must have n entries");
        const double pf = pfaffian_recursive(opt.n, opt.point);
        const auto S = structure_matrix(opt.n, opt.point);
        const std::complex<double> det = determinant(S.matrix, 2 * opt.n);
        const double err = std::abs(det - pf * pf) / std::abs(det);
        rep.cases.push_back(make_case("det(S) = Pf^2 at the given point", pf > 0.0 && err <= 1e-8,
                                      err, t.seconds(), "Pf = " + std::to_string(pf)));
        return rep;
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    double worst = 0.0;
    bool positive = true;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::complex<double>> pt(static_cast<std::size_t>(opt.n));
        for (auto& z : pt) z = {coord(rng), coord(rng)};
        const double pf = pfaffian_recursive(opt.n, pt);
        positive = positive && pf > 0.0;
        const auto S = structure_matrix(opt.n, pt);
        const std::complex<double> det = determinant(S.matrix, 2 * opt.n);
        worst = std::max(worst, std::abs(det - pf * pf) / std::abs(det));
    }
    rep.cases.push_back(
        make_case("det(S) = Pf^2 at 100 points", positive && worst <= 1e-8, worst, t.seconds()));
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "confluence", "jacobi",     "poisson-map", "constraint", "semiclassical",
        "relations",  "lowering",   "gram",        "lemma",      "defect",
        "idempotency", "traces",    "pairings",    "pfaffian"};
    return names;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "confluence") return suite_confluence(opt);
    if (name == "jacobi") return suite_jacobi(opt);
    if (name == "poisson-map") return suite_poisson_map(opt);
    if (name == "constraint") return suite_constraint(opt);
    if (name == "semiclassical") return suite_semiclassical(opt);
    if (name == "relations") return suite_relations(opt);
    if (name == "lowering") return suite_lowering(opt);
    if (name == "gram") return suite_gram(opt);
    if (name == "lemma") return suite_lemma(opt);
    if (name == "defect") return suite_defect(opt);
    if (name == "idempotency") return suite_idempotency(opt);
    if (name == "traces") return suite_traces(opt);
    if (name == "pairings") return suite_pairings(opt);
    if (name == "pfaffian") return suite_pfaffian(opt);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_all_suites(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
    return out;
}

}  // namespace qsusp
