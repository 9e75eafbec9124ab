#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsusp/parser.hpp"

using namespace qsusp;

namespace {

std::mt19937_64 rng(46711);

NCPoly random_poly(const AlgebraPreset& A) {
    std::uniform_int_distribution<int> nterms(0, 4), len(0, 5);
    std::uniform_int_distribution<int> code(0, A.num_codes() - 1);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::uniform_int_distribution<int> qexp(-3, 3);
    RawPoly raw;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Word w;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back(static_cast<GenCode>(code(rng)));
        raw.push_back({LaurentQ::term(Rational(num(rng), den(rng)), qexp(rng)), std::move(w)});
    }
    return normalize(raw, A);
}

}  // namespace

TEST_CASE("expression evaluation examples") {
    const auto A2 = AlgebraPreset::even_sphere(2);
    const NCPoly t = NCPoly::generator(0);
    const NCPoly a1 = NCPoly::generator(2);

    CHECK(parse_quantum("a1 * t", A2) == LaurentQ::q_power(2) * mul(t, a1, A2));
    CHECK(parse_quantum("q^2 * t - t", A2) == (LaurentQ::q_power(2) - LaurentQ(1)) * t);

    const auto chart = PoissonStructure::chart_plane(1);
    const ClassicalPoly z = ClassicalPoly::variable(chart.vars(), 0);
    const ClassicalPoly zbar = ClassicalPoly::variable(chart.vars(), 1);
    const ClassicalPoly expect = ClassicalPoly::scalar(2, Rational(2)) + Rational(2) * (z * zbar);
    CHECK(parse_classical("{z1, z1*}", chart) == expect);
}

TEST_CASE("commutators, powers, juxtaposition, rationals") {
    const auto A = AlgebraPreset::even_sphere(2);
    CHECK(parse_quantum("[a1, t]", A) ==
          commutator(NCPoly::generator(2), NCPoly::generator(0), A));
    CHECK(parse_quantum("t^3", A) ==
          mul(mul(NCPoly::generator(0), NCPoly::generator(0), A), NCPoly::generator(0), A));
    // juxtaposition multiplies; a glued star is the involution
    CHECK(parse_quantum("t a1", A) == parse_quantum("t * a1", A));
    CHECK(parse_quantum("a1* a1", A) == mul(NCPoly::generator(1), NCPoly::generator(2), A));
    CHECK(parse_quantum("1/2 * t", A) == LaurentQ(Rational(1, 2)) * NCPoly::generator(0));
    CHECK(parse_quantum("q^-2", A) == NCPoly::scalar(LaurentQ::q_power(-2)));
    CHECK(parse_quantum("-t + t", A).is_zero());
    CHECK(parse_quantum("(t + a1)^2", A) ==
          mul(parse_quantum("t + a1", A), parse_quantum("t + a1", A), A));
}

TEST_CASE("parser error paths") {
    const auto A = AlgebraPreset::even_sphere(1);
    const auto chart = PoissonStructure::chart_plane(1);
    CHECK_THROWS_AS(parse_quantum("{t, t}", A), ParseError);      // Poisson bracket on quantum preset
    CHECK_THROWS_AS(parse_classical("[z1, z1*]", chart), ParseError);
    CHECK_THROWS_AS(parse_quantum("a2 * t", A), ParseError);      // index out of range for n=1
    CHECK_THROWS_AS(parse_quantum("z1", A), ParseError);          // wrong family
    CHECK_THROWS_AS(parse_quantum("t +", A), ParseError);
    CHECK_THROWS_AS(parse_quantum("(t", A), ParseError);
    CHECK_THROWS_AS(parse_quantum("t ) t", A), ParseError);
    CHECK_THROWS_AS(parse_quantum("1/0", A), ParseError);
    CHECK_THROWS_AS(parse_classical("q^2 * z1", chart), ParseError);
    try {
        parse_quantum("t + $", A);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    const std::vector<AlgebraPreset> presets{
        AlgebraPreset::even_sphere(1), AlgebraPreset::even_sphere(3),
        AlgebraPreset::odd_plane(2), AlgebraPreset::podles_product(2),
        AlgebraPreset::podles_sphere()};
    for (const auto& A : presets) {
        for (int trial = 0; trial < 120; ++trial) {
            const NCPoly p = random_poly(A);
            const std::string text = to_string(p, A);
            CAPTURE(text);
            CHECK(parse_quantum(text, A) == p);
        }
    }
}

TEST_CASE("garbage input throws ParseError, never crashes") {
    const auto A = AlgebraPreset::even_sphere(2);
    const std::string alphabet = "at12*^+-()[]{} ,/qxz#.";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    int parsed_ok = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) text += alphabet[pick(rng)];
        try {
            parse_quantum(text, A);
            ++parsed_ok;
        } catch (const ParseError&) {
        }
    }
    CHECK(parsed_ok >= 0);  // reaching here means no crash or foreign exception
}

TEST_CASE("classical parse handles tau star and products") {
    const auto prod = PoissonStructure::product_podles(2);
    CHECK(parse_classical("tau1*", prod) == parse_classical("tau1", prod));
    CHECK(parse_classical("alpha1 alpha1* - tau1 + tau1^2", prod).is_zero());  // sphere relation
    const auto coind = PoissonStructure::even_sphere_coinduced(2);
    CHECK(parse_classical("{a1, t}", coind) ==
          Rational(-2) * parse_classical("a1 t", coind));
}
