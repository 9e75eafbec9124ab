#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsusp/laurent.hpp"
#include "qsusp/rational.hpp"

using namespace qsusp;

namespace {

std::mt19937_64 rng(20240901);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

LaurentQ random_laurent(int max_terms = 5, int max_exp = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    LaurentQ p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += LaurentQ::term(random_rational(), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).den() > 0);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("-14/21") == Rational(-2, 3));
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("laurent_eval examples") {
    const LaurentQ p = LaurentQ(1) - LaurentQ::q_power(2);  // 1 - q^2
    CHECK(p.eval(Rational(1, 2)) == Rational(3, 4));
    CHECK(LaurentQ::q_power(-1).eval(Rational(1, 2)) == Rational(2));
    CHECK(LaurentQ().eval(0.7) == 0.0);
    CHECK_THROWS(LaurentQ::q_power(-1).eval(Rational(0)));
    // q^2 at 0 is fine
    CHECK(LaurentQ::q_power(2).eval(Rational(0)) == Rational(0));
}

TEST_CASE("laurent_div_one_minus_q examples") {
    const LaurentQ one(1);
    const LaurentQ q = LaurentQ::q_power(1);
    CHECK((one - q * q).div_one_minus_q() == one + q);
    CHECK((LaurentQ::q_power(-1) * (one - q)).div_one_minus_q() == LaurentQ::q_power(-1));
    CHECK((one - q).div_one_minus_q() == one);
    CHECK(LaurentQ().div_one_minus_q() == LaurentQ());
    CHECK_THROWS_AS((one + q).div_one_minus_q(), NotDivisibleError);
    CHECK_THROWS_AS(one.div_one_minus_q(), NotDivisibleError);
}

TEST_CASE("ring laws on random triples") {
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentQ a = random_laurent(), b = random_laurent(), c = random_laurent();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentQ());
    }
}

TEST_CASE("division by (1-q) round-trips") {
    const LaurentQ one_minus_q = LaurentQ(1) - LaurentQ::q_power(1);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentQ r = random_laurent();
        const LaurentQ p = r * one_minus_q;
        CHECK(p.div_one_minus_q() == r);
        CHECK(p.div_one_minus_q() * one_minus_q == p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentQ p = random_laurent(), r = random_laurent();
        Rational q0 = random_rational();
        if (q0.is_zero()) q0 = Rational(1, 3);
        CHECK((p * r).eval(q0) == p.eval(q0) * r.eval(q0));
        CHECK((p + r).eval(q0) == p.eval(q0) + r.eval(q0));
    }
}

TEST_CASE("laurent printing") {
    CHECK(LaurentQ().str() == "0");
    CHECK((LaurentQ(1) - LaurentQ::q_power(2)).str() == "1 - q^2");
    CHECK(LaurentQ::q_power(-1).str() == "q^-1");
    CHECK(LaurentQ::term(Rational(1, 2), 1).str() == "1/2*q");
    CHECK((LaurentQ(-1) * LaurentQ::q_power(3)).str() == "-q^3");
}
