#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qsusp/rational.hpp"

namespace qsusp {

/// Signals a Laurent polynomial that is not divisible by (1-q).
class NotDivisibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Laurent polynomial in the deformation parameter q with exact rational
/// coefficients. Zero coefficients are never stored; equality is equality
/// of the term maps.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(const Rational& c) { if (!c.is_zero()) terms_[0] = c; }
    LaurentQ(long c) : LaurentQ(Rational(c)) {}
    LaurentQ(int c) : LaurentQ(Rational(c)) {}

    /// c * q^k
    static LaurentQ term(const Rational& c, int k) {
        LaurentQ p;
        if (!c.is_zero()) p.terms_[k] = c;
        return p;
    }
    static LaurentQ q_power(int k) { return term(Rational(1), k); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    /// Constant term (coefficient of q^0).
    Rational constant_value() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }
    friend LaurentQ operator-(const LaurentQ& a);

    LaurentQ pow(unsigned e) const;

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }
    bool operator<(const LaurentQ& o) const { return terms_ < o.terms_; }

    /// Exact evaluation at a rational point. q0 = 0 is rejected when
    /// negative exponents are present.
    Rational eval(const Rational& q0) const;
    double eval(double q0) const;

    /// Exact quotient by (1-q). Throws NotDivisibleError when the value at
    /// q = 1 is nonzero, i.e. the factor is absent.
    LaurentQ div_one_minus_q() const;

    /// Rendered as a sum of c*q^k terms in increasing k, e.g. "1 - q^2".
    std::string str() const;

private:
    void add_term(int k, const Rational& c);
    std::map<int, Rational> terms_;
};

}  // namespace qsusp
