#include "qsusp/classical.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsusp {

ClassicalVars::ClassicalVars(ClassicalKind kind, int n) : kind_(kind), n_(n) {
    if (n < 1) throw std::invalid_argument("ClassicalVars: n must be positive");
    switch (kind) {
        case ClassicalKind::ProductPodles: num_vars_ = 3 * n; break;
        case ClassicalKind::EvenSphereCoinduced: num_vars_ = 2 * n + 1; break;
        case ClassicalKind::ChartPlane: num_vars_ = 2 * n; break;
    }
}

bool ClassicalVars::is_tau_type(int v) const {
    switch (kind_) {
        case ClassicalKind::ProductPodles: return v % 3 == 0;
        case ClassicalKind::EvenSphereCoinduced: return v == 0;
        case ClassicalKind::ChartPlane: return false;
    }
    return false;
}

int ClassicalVars::conj(int v) const {
    if (is_tau_type(v)) return v;
    switch (kind_) {
        case ClassicalKind::ProductPodles: return v % 3 == 1 ? v + 1 : v - 1;
        case ClassicalKind::EvenSphereCoinduced: return v % 2 == 1 ? v + 1 : v - 1;
        case ClassicalKind::ChartPlane: return v % 2 == 0 ? v + 1 : v - 1;
    }
    return v;
}

std::string ClassicalVars::name(int v) const {
    if (v < 0 || v >= num_vars_) throw std::out_of_range("ClassicalVars: bad variable");
    switch (kind_) {
        case ClassicalKind::ProductPodles: {
            const int copy = v / 3 + 1;
            switch (v % 3) {
                case 0: return "tau" + std::to_string(copy);
                case 1: return "alpha" + std::to_string(copy) + "*";
                default: return "alpha" + std::to_string(copy);
            }
        }
        case ClassicalKind::EvenSphereCoinduced: {
            if (v == 0) return "t";
            const int i = (v + 1) / 2;
            return "a" + std::to_string(i) + (v % 2 == 1 ? "*" : "");
        }
        case ClassicalKind::ChartPlane: {
            const int i = v / 2 + 1;
            return "z" + std::to_string(i) + (v % 2 == 1 ? "*" : "");
        }
    }
    throw std::logic_error("unreachable");
}

std::optional<int> ClassicalVars::by_name(const std::string& nm) const {
    for (int v = 0; v < num_vars_; ++v)
        if (name(v) == nm) return v;
    return std::nullopt;
}

ClassicalPoly ClassicalPoly::variable(const ClassicalVars& vars, int v) {
    Monomial m(vars.num_vars(), 0);
    m[static_cast<std::size_t>(v)] = vars.is_tau_type(v) ? 2 : 1;
    return monomial(std::move(m), Rational(1));
}

void ClassicalPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ClassicalPoly& ClassicalPoly::operator+=(const ClassicalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ClassicalPoly& ClassicalPoly::operator-=(const ClassicalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b) {
    ClassicalPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

ClassicalPoly operator*(const Rational& c, const ClassicalPoly& p) {
    ClassicalPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

ClassicalPoly ClassicalPoly::derivative(const ClassicalVars& vars, int v) const {
    const bool tau = vars.is_tau_type(v);
    const auto vi = static_cast<std::size_t>(v);
    ClassicalPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[vi] == 0) continue;
        Monomial dm = m;
        Rational factor;
        if (tau) {
            factor = Rational(m[vi], 2);  // exponent stored in half-steps
            dm[vi] -= 2;
        } else {
            factor = Rational(m[vi]);
            dm[vi] -= 1;
        }
        r.add_term(dm, c * factor);
    }
    return r;
}

std::complex<double> ClassicalPoly::eval(const ClassicalVars& vars,
                                         const std::vector<std::complex<double>>& assignment) const {
    std::complex<double> total = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> v = c.to_double();
        for (std::size_t i = 0; i < m.size(); ++i) {
            int e = m[i];
            if (e == 0) continue;
            if (e < 0) throw std::domain_error("ClassicalPoly::eval: negative exponent");
            const std::complex<double> x = assignment.at(i);
            if (vars.is_tau_type(static_cast<int>(i))) {
                if (e % 2 != 0) {
                    v *= std::sqrt(x);  // tau-type variables are nonnegative reals
                    e -= 1;
                }
                e /= 2;
            }
            for (int k = 0; k < e; ++k) v *= x;
        }
        total += v;
    }
    return total;
}

bool ClassicalPoly::exponents_nonnegative() const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        for (int e : m)
            if (e < 0) return false;
    }
    return true;
}

std::string ClassicalPoly::str(const ClassicalVars& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string word;
        for (int v = 0; v < vars.num_vars(); ++v) {
            const int e = m[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            if (!word.empty()) word += " ";
            word += vars.name(v);
            if (vars.is_tau_type(v)) {
                if (e != 2)
                    word += e % 2 == 0 ? "^" + std::to_string(e / 2)
                                       : "^(" + std::to_string(e) + "/2)";
            } else if (e != 1) {
                word += "^" + std::to_string(e);
            }
        }
        if (word.empty()) {
            out << mag.str();
        } else if (mag.is_one()) {
            out << word;
        } else {
            out << mag.str() << " * " << word;
        }
    }
    return out.str();
}

}  // namespace qsusp
