#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qsusp/ktheory.hpp"

using namespace qsusp;

namespace {

LaurentQ qp(int k) { return LaurentQ::q_power(k); }
LaurentQ one_minus_q2() { return LaurentQ(1) - qp(2); }

NCPoly gen(const AlgebraPreset& A, const std::string& name) {
    auto c = A.code_by_name(name);
    REQUIRE(c.has_value());
    return NCPoly::generator(*c);
}

std::mt19937_64 rng(771221);

NCPoly random_poly(const AlgebraPreset& A) {
    std::uniform_int_distribution<int> nterms(1, 3), len(0, 4);
    std::uniform_int_distribution<int> code(0, A.num_codes() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    RawPoly raw;
    for (int t = 0; t < nterms(rng); ++t) {
        Word w;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back(static_cast<GenCode>(code(rng)));
        raw.push_back({LaurentQ(coeff(rng)), std::move(w)});
    }
    return normalize(raw, A);
}

void random_sphere_point(int n, double& t, std::vector<std::complex<double>>& a) {
    std::uniform_real_distribution<double> tdist(0.05, 0.95), u(-1.0, 1.0);
    t = tdist(rng);
    a.assign(static_cast<std::size_t>(n), 0.0);
    double norm2 = 0.0;
    for (auto& ai : a) {
        ai = {u(rng), u(rng)};
        norm2 += std::norm(ai);
    }
    const double scale = std::sqrt(t * (1.0 - t) / norm2);
    for (auto& ai : a) ai *= scale;
}

}  // namespace

TEST_CASE("diagonal scaler recursion") {
    CHECK(diagonal_scaler_entry(0) == qp(1));
    // C_{2(k+1)} = diag(C_{2k}, q C_{2k})
    for (int k = 0; k < 3; ++k) {
        const int s = 1 << k;
        for (int j = 0; j < s; ++j) {
            CHECK(diagonal_scaler_entry(s + j) == qp(1) * diagonal_scaler_entry(j));
        }
    }
}

TEST_CASE("build_e base cases") {
    const auto e10 = build_e(1, 0);
    CHECK(e10.size() == 1);
    CHECK(e10.at(0, 0) == NCPoly::scalar(LaurentQ(1)) - NCPoly::generator(0));

    const auto P1 = AlgebraPreset::odd_plane(1);
    const auto e11 = build_e(1, 1);
    CHECK(e11.size() == 2);
    CHECK(e11.at(0, 0) == NCPoly::scalar(LaurentQ(1)) - gen(P1, "y"));
    CHECK(e11.at(0, 1) == qp(1) * gen(P1, "x1*"));
    CHECK(e11.at(1, 0) == qp(1) * gen(P1, "x1"));
    CHECK(e11.at(1, 1) == qp(2) * gen(P1, "y"));

    const auto e21 = build_e(2, 1);
    CHECK(e21.size() == 2);
    const auto P2 = AlgebraPreset::odd_plane(2);
    CHECK(e21.at(1, 0) == qp(1) * gen(P2, "x1"));
}

TEST_CASE("scaling automorphism is a homomorphism that kills the quotient") {
    const auto P = AlgebraPreset::odd_plane(2);
    for (int trial = 0; trial < 40; ++trial) {
        const NCPoly f = random_poly(P), g = random_poly(P);
        CHECK(scaling_automorphism(mul(f, g, P)) ==
              mul(scaling_automorphism(f), scaling_automorphism(g), P));
    }
    // phi does not descend to the sphere: phi(modulus element) is nonzero there
    const auto A = AlgebraPreset::even_sphere(2);
    RawPoly raw;
    for (int i = 1; i <= 2; ++i)
        raw.push_back({qp(2), Word{static_cast<GenCode>(2 * i - 1), static_cast<GenCode>(2 * i)}});
    raw.push_back({LaurentQ(-1), Word{0}});
    raw.push_back({LaurentQ(1), Word{0, 0}});
    const NCPoly modulus_plane = normalize(raw, AlgebraPreset::odd_plane(2));
    const NCPoly phi_image = scaling_automorphism(modulus_plane);
    CHECK(normalize(modulus_plane.raw(), A).is_zero());
    CHECK(!normalize(phi_image.raw(), A).is_zero());
}

TEST_CASE("lemma residual vanishes for all k < l <= n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(l);
                CHECK(check_lemma_M(n, k, l).is_zero());
            }
    CHECK_THROWS(check_lemma_M(2, 1, 1));
}

TEST_CASE("defect identity holds for all k <= n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(check_defect(n, k).is_zero());
        }

    // (1,1): the defect itself equals [q^2 x*x - y(1-y)] diag(1, q^2)
    const auto P = AlgebraPreset::odd_plane(1);
    const auto e = build_e(1, 1);
    const NCMatrix sq = mul(e, e, P);
    const NCPoly defect = normalize(
        RawPoly{{qp(2), Word{1, 2}}, {LaurentQ(-1), Word{0}}, {LaurentQ(1), Word{0, 0}}}, P);
    NCMatrix expected(2);
    expected.at(0, 0) = defect;
    expected.at(1, 1) = qp(2) * defect;
    CHECK((sq - e) == expected);
}

TEST_CASE("G is an exact idempotent over the sphere") {
    const auto A1 = AlgebraPreset::even_sphere(1);
    const auto g1 = build_G(1);
    CHECK(g1.at(0, 0) == NCPoly::scalar(LaurentQ(1)) - gen(A1, "t"));
    CHECK(g1.at(0, 1) == qp(1) * gen(A1, "a1*"));
    CHECK(g1.at(1, 0) == qp(1) * gen(A1, "a1"));
    CHECK(g1.at(1, 1) == qp(2) * gen(A1, "t"));

    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        const auto A = AlgebraPreset::even_sphere(n);
        const auto g = build_G(n);
        CHECK(g.size() == (1 << n));
        CHECK((mul(g, g, A) - g).is_zero());
    }
}

TEST_CASE("projected defect re-derives idempotency") {
    // e^2 - e lives in the modulus ideal, so pushing it through the sphere
    // quotient entrywise must give the zero matrix.
    for (int n = 1; n <= 3; ++n) {
        const auto plane = AlgebraPreset::odd_plane(n);
        const auto sphere = AlgebraPreset::even_sphere(n);
        const auto e = build_e(n, n);
        const NCMatrix defect = mul(e, e, plane) - e;
        for (int i = 0; i < defect.size(); ++i)
            for (int j = 0; j < defect.size(); ++j)
                CHECK(normalize(defect.at(i, j).raw(), sphere).is_zero());
    }
}

TEST_CASE("parallel and serial matrix products agree") {
    const auto P = AlgebraPreset::odd_plane(2);
    const auto e = build_e(2, 2);
    const auto a = mul(e, e, P);
    const auto b = mul_serial(e, e, P);
    CHECK(a == b);
}

TEST_CASE("trace formulas in solved form") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= n; ++k) {
            // Tr(e_{2k}) = 2^{k-1} - (1-q^2)^k y
            const NCPoly tr = matrix_trace(build_e(n, k));
            NCPoly expect = NCPoly::scalar(LaurentQ(1 << (k - 1)));
            expect -= one_minus_q2().pow(static_cast<unsigned>(k)) * NCPoly::generator(0);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(tr == expect);
        }
        const NCPoly trg = matrix_trace(build_G(n));
        NCPoly expect = NCPoly::scalar(LaurentQ(1 << (n - 1)));
        expect -= one_minus_q2().pow(static_cast<unsigned>(n)) * NCPoly::generator(0);
        CHECK(trg == expect);

        // at q = 1 the quantum trace collapses to the classical rank
        for (const auto& [w, c] : trg.terms()) {
            if (w.empty())
                CHECK(c.eval(Rational(1)) == Rational(1 << (n - 1)));
            else
                CHECK(c.eval(Rational(1)) == Rational(0));
        }
    }
}

TEST_CASE("epsilon pairing is the rank") {
    CHECK(pair_epsilon(1) == Rational(1));
    CHECK(pair_epsilon(2) == Rational(2));
    CHECK(pair_epsilon(3) == Rational(4));
}

TEST_CASE("charge pairing is -1 within tail bounds") {
    const auto tb1 = pair_charge(1, 0.5, 60);
    CHECK(std::abs(tb1.value + 1.0) <= 1e-6);
    const auto tb2 = pair_charge(2, 0.3, 60);
    CHECK(std::abs(tb2.value + 1.0) <= 1e-6);
    const auto tb3 = pair_charge(3, 0.8, 80);
    CHECK(std::abs(tb3.value + 1.0) <= 1e-6);
    CHECK(tb3.bound <= 1e-6);

    // the full-matrix route agrees for n <= 2
    for (int n = 1; n <= 2; ++n) {
        const auto scalar_route = pair_charge(n, 0.5, 40);
        const auto matrix_route = pair_charge_matrix(n, 0.5, 40);
        CHECK(scalar_route.value ==
              doctest::Approx(matrix_route.value).epsilon(1e-10));
    }
}

TEST_CASE("classical idempotent at poles and random points") {
    const auto north = classical_G(1, 0.0, {0.0});
    CHECK(north.dim == 2);
    CHECK(north.matrix[0] == std::complex<double>(1.0));
    CHECK(north.matrix[3] == std::complex<double>(0.0));
    CHECK(north.trace == doctest::Approx(1.0));

    const auto south = classical_G(1, 1.0, {0.0});
    CHECK(south.matrix[0] == std::complex<double>(0.0));
    CHECK(south.matrix[3] == std::complex<double>(1.0));
    CHECK(south.trace == doctest::Approx(1.0));

    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            double t;
            std::vector<std::complex<double>> a;
            random_sphere_point(n, t, a);
            const auto res = classical_G(n, t, a);
            CHECK(res.idempotency_error <= 1e-12);
            CHECK(std::abs(res.trace - static_cast<double>(1 << (n - 1))) <= 1e-12);
        }
    }

    CHECK_THROWS_AS(classical_G(1, 0.5, {std::complex<double>(0.9, 0.0)}), std::domain_error);
}
