#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsusp/rational.hpp"

namespace qsusp {

enum class ClassicalKind { ProductPodles, EvenSphereCoinduced, ChartPlane };

/// Variable set of a classical coordinate algebra. Variable codes mirror
/// the quantum generator codes so dequantization is code-for-code:
///   EvenSphereCoinduced:  t=0, abar_1=1, a_1=2, abar_2=3, ...
///   ProductPodles:        tau_1=0, alphabar_1=1, alpha_1=2, tau_2=3, ...
///   ChartPlane:           z_1=0, zbar_1=1, z_2=2, ...
class ClassicalVars {
public:
    ClassicalVars(ClassicalKind kind, int n);

    ClassicalKind kind() const { return kind_; }
    int n() const { return n_; }
    int num_vars() const { return num_vars_; }

    /// tau-type variables store exponents in half-steps.
    bool is_tau_type(int v) const;
    /// Conjugate variable (tau-type variables are self-conjugate).
    int conj(int v) const;
    std::string name(int v) const;
    std::optional<int> by_name(const std::string& name) const;

    friend bool operator==(const ClassicalVars& a, const ClassicalVars& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_;
    }

private:
    ClassicalKind kind_;
    int n_;
    int num_vars_;
};

/// Exponent vector, one entry per variable; tau-type entries count
/// half-steps so the suspension map stays exact.
using Monomial = std::vector<int>;

/// Commutative polynomial with exact rational coefficients.
class ClassicalPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    ClassicalPoly() = default;

    static ClassicalPoly scalar(int nvars, const Rational& c) {
        ClassicalPoly p;
        if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    /// Single variable to the first power (half-step 2 for tau-type).
    static ClassicalPoly variable(const ClassicalVars& vars, int v);
    static ClassicalPoly monomial(Monomial m, const Rational& c) {
        ClassicalPoly p;
        if (!c.is_zero()) p.terms_[std::move(m)] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c);

    ClassicalPoly& operator+=(const ClassicalPoly& o);
    ClassicalPoly& operator-=(const ClassicalPoly& o);
    friend ClassicalPoly operator+(ClassicalPoly a, const ClassicalPoly& b) { return a += b; }
    friend ClassicalPoly operator-(ClassicalPoly a, const ClassicalPoly& b) { return a -= b; }
    friend ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b);
    friend ClassicalPoly operator*(const Rational& c, const ClassicalPoly& p);
    friend ClassicalPoly operator-(const ClassicalPoly& p) { return Rational(-1) * p; }

    friend bool operator==(const ClassicalPoly& a, const ClassicalPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ClassicalPoly& a, const ClassicalPoly& b) { return !(a == b); }

    /// Partial derivative with respect to variable v. Half-step exponents
    /// differentiate to rational multiples; intermediate negative exponents
    /// are allowed here and must cancel inside bracket assembly.
    ClassicalPoly derivative(const ClassicalVars& vars, int v) const;

    std::complex<double> eval(const ClassicalVars& vars,
                              const std::vector<std::complex<double>>& assignment) const;

    /// True when all exponents are nonnegative (the public invariant).
    bool exponents_nonnegative() const;

    std::string str(const ClassicalVars& vars) const;

private:
    Terms terms_;
};

}  // namespace qsusp
