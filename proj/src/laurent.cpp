#include "qsusp/laurent.hpp"

#include <cmath>
#include <sstream>

namespace qsusp {

void LaurentQ::add_term(int k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentQ operator-(const LaurentQ& a) {
    LaurentQ r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentQ LaurentQ::pow(unsigned e) const {
    LaurentQ r(1);
    LaurentQ base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

Rational LaurentQ::eval(const Rational& q0) const {
    if (q0.is_zero() && !terms_.empty() && terms_.begin()->first < 0)
        throw std::domain_error("LaurentQ: evaluation at 0 with negative exponents");
    Rational r(0);
    for (const auto& [k, c] : terms_) r += c * q0.pow(k);
    return r;
}

double LaurentQ::eval(double q0) const {
    if (q0 == 0.0 && !terms_.empty() && terms_.begin()->first < 0)
        throw std::domain_error("LaurentQ: evaluation at 0 with negative exponents");
    double r = 0.0;
    for (const auto& [k, c] : terms_) r += c.to_double() * std::pow(q0, k);
    return r;
}

LaurentQ LaurentQ::div_one_minus_q() const {
    if (terms_.empty()) return LaurentQ();
    // p = (1-q) r means p_k = r_k - r_{k-1}; accumulate r_k = r_{k-1} + p_k
    // from the lowest exponent up. Exact division requires the running sum
    // to vanish past the top, i.e. p(1) = 0.
    const int lo = min_exp();
    const int hi = max_exp();
    LaurentQ r;
    Rational run(0);
    for (int k = lo; k <= hi; ++k) {
        auto it = terms_.find(k);
        if (it != terms_.end()) run += it->second;
        if (k < hi && !run.is_zero()) r.terms_[k] = run;
    }
    if (!run.is_zero())
        throw NotDivisibleError("LaurentQ: not divisible by (1-q), p(1) = " + run.str());
    return r;
}

std::string LaurentQ::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.str();
        } else {
            if (!mag.is_one()) out << mag.str() << "*";
            out << "q";
            if (k != 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace qsusp
