#include "qsusp/algebra.hpp"

#include <stdexcept>

namespace qsusp {

namespace {

LaurentQ qp(int k) { return LaurentQ::q_power(k); }

// 1 - q^2
LaurentQ one_minus_q2() { return LaurentQ(1) - qp(2); }

}  // namespace

bool word_order_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

AlgebraPreset::AlgebraPreset(PresetKind kind, int n) : kind_(kind), n_(n) {
    if (n < 1) throw std::invalid_argument("AlgebraPreset: n must be positive");
    num_codes_ = (kind == PresetKind::EvenSphere || kind == PresetKind::OddPlane) ? 2 * n + 1 : 3 * n;
    if (num_codes_ > 200) throw std::invalid_argument("AlgebraPreset: n too large for the code space");
    rules_.resize(static_cast<std::size_t>(num_codes_) * num_codes_);
}

AlgebraPreset AlgebraPreset::podles_sphere() {
    AlgebraPreset a(PresetKind::PodlesSphere, 1);
    a.build_podles_rules();
    return a;
}

AlgebraPreset AlgebraPreset::podles_product(int n) {
    AlgebraPreset a(PresetKind::PodlesProduct, n);
    a.build_podles_rules();
    return a;
}

AlgebraPreset AlgebraPreset::even_sphere(int n) {
    AlgebraPreset a(PresetKind::EvenSphere, n);
    a.build_quantum_plane_rules(true);
    return a;
}

AlgebraPreset AlgebraPreset::odd_plane(int n) {
    AlgebraPreset a(PresetKind::OddPlane, n);
    a.build_quantum_plane_rules(false);
    return a;
}

void AlgebraPreset::add_rule(GenCode x, GenCode y, RawPoly rhs) {
    rules_[static_cast<std::size_t>(x) * num_codes_ + y] = std::move(rhs);
}

void AlgebraPreset::set_rule(GenCode x, GenCode y, RawPoly rhs) { add_rule(x, y, std::move(rhs)); }

// Relations of Pol(R^{2n+1}_q), oriented so the smaller code moves left:
//   a_i t    -> q^2  t a_i             a_i* t   -> q^-2 t a_i*
//   a_j a_i  -> q    a_i a_j   (i<j)   a_j* a_i -> q^-3 a_i a_j*  (i<j)
//   a_j a_i* -> q^3  a_i* a_j  (i<j)   a_j* a_i*-> q^-1 a_i* a_j* (i<j)
//   a_i a_i* -> q^2 a_i* a_i + q^2(1-q^2) sum_{l<i} a_l* a_l + (1-q^2) t^2
// and for the even sphere the modulus relation solved for the top pair:
//   a_n* a_n -> q^-2 (t - t^2) - sum_{i<n} a_i* a_i
void AlgebraPreset::build_quantum_plane_rules(bool modulus_rule) {
    const GenCode t = 0;
    auto astar = [](int i) { return static_cast<GenCode>(2 * i - 1); };
    auto a = [](int i) { return static_cast<GenCode>(2 * i); };

    for (int i = 1; i <= n_; ++i) {
        add_rule(a(i), t, {{qp(2), {t, a(i)}}});
        add_rule(astar(i), t, {{qp(-2), {t, astar(i)}}});
    }
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            add_rule(a(j), a(i), {{qp(1), {a(i), a(j)}}});
            add_rule(astar(j), a(i), {{qp(-3), {a(i), astar(j)}}});
            add_rule(a(j), astar(i), {{qp(3), {astar(i), a(j)}}});
            add_rule(astar(j), astar(i), {{qp(-1), {astar(i), astar(j)}}});
        }
    }
    for (int i = 1; i <= n_; ++i) {
        RawPoly rhs;
        rhs.push_back({qp(2), {astar(i), a(i)}});
        for (int l = 1; l < i; ++l) rhs.push_back({qp(2) * one_minus_q2(), {astar(l), a(l)}});
        rhs.push_back({one_minus_q2(), {t, t}});
        add_rule(a(i), astar(i), std::move(rhs));
    }
    if (modulus_rule) {
        RawPoly rhs;
        rhs.push_back({qp(-2), {t}});
        rhs.push_back({-qp(-2), {t, t}});
        for (int i = 1; i < n_; ++i) rhs.push_back({LaurentQ(-1), {astar(i), a(i)}});
        add_rule(astar(n_), a(n_), std::move(rhs));
    }
}

// Podles standard sphere per copy, all copies commuting:
//   alpha tau   -> q^2  tau alpha        alpha* tau -> q^-2 tau alpha*
//   alpha alpha*  -> tau - q^2 tau^2
//   alpha* alpha  -> q^-2 (tau - tau^2)
void AlgebraPreset::build_podles_rules() {
    auto tau = [](int i) { return static_cast<GenCode>(3 * (i - 1)); };
    auto astar = [](int i) { return static_cast<GenCode>(3 * (i - 1) + 1); };
    auto alpha = [](int i) { return static_cast<GenCode>(3 * (i - 1) + 2); };

    for (int i = 1; i <= n_; ++i) {
        add_rule(alpha(i), tau(i), {{qp(2), {tau(i), alpha(i)}}});
        add_rule(astar(i), tau(i), {{qp(-2), {tau(i), astar(i)}}});
        add_rule(alpha(i), astar(i), {{LaurentQ(1), {tau(i)}}, {-qp(2), {tau(i), tau(i)}}});
        add_rule(astar(i), alpha(i), {{qp(-2), {tau(i)}}, {-qp(-2), {tau(i), tau(i)}}});
    }
    // Generators of distinct copies commute exactly.
    for (GenCode x = 0; x < num_codes_; ++x) {
        for (GenCode y = 0; y < num_codes_; ++y) {
            if (x / 3 > y / 3) add_rule(x, y, {{LaurentQ(1), {y, x}}});
        }
    }
}

GenCode AlgebraPreset::star(GenCode g) const {
    const GeneratorId id = id_of(g);
    switch (id.family) {
        case GenFamily::TLike:
            return g;
        case GenFamily::Star:
            return code_of({GenFamily::Plain, id.index});
        case GenFamily::Plain:
            return code_of({GenFamily::Star, id.index});
    }
    throw std::logic_error("unreachable");
}

GeneratorId AlgebraPreset::id_of(GenCode g) const {
    if (g >= num_codes_) throw std::out_of_range("AlgebraPreset: bad generator code");
    if (kind_ == PresetKind::EvenSphere || kind_ == PresetKind::OddPlane) {
        if (g == 0) return {GenFamily::TLike, 0};
        return {g % 2 == 1 ? GenFamily::Star : GenFamily::Plain, (g + 1) / 2};
    }
    const int copy = g / 3 + 1;
    switch (g % 3) {
        case 0: return {GenFamily::TLike, copy};
        case 1: return {GenFamily::Star, copy};
        default: return {GenFamily::Plain, copy};
    }
}

GenCode AlgebraPreset::code_of(const GeneratorId& id) const {
    if (kind_ == PresetKind::EvenSphere || kind_ == PresetKind::OddPlane) {
        if (id.family == GenFamily::TLike) return 0;
        if (id.index < 1 || id.index > n_) throw std::out_of_range("AlgebraPreset: index out of range");
        return static_cast<GenCode>(id.family == GenFamily::Star ? 2 * id.index - 1 : 2 * id.index);
    }
    if (id.index < 1 || id.index > n_) throw std::out_of_range("AlgebraPreset: index out of range");
    const int base = 3 * (id.index - 1);
    switch (id.family) {
        case GenFamily::TLike: return static_cast<GenCode>(base);
        case GenFamily::Star: return static_cast<GenCode>(base + 1);
        default: return static_cast<GenCode>(base + 2);
    }
}

std::string AlgebraPreset::generator_name(GenCode g) const {
    const GeneratorId id = id_of(g);
    const bool sphere_like = kind_ == PresetKind::EvenSphere;
    const bool plane_like = kind_ == PresetKind::OddPlane;
    switch (id.family) {
        case GenFamily::TLike:
            if (sphere_like) return "t";
            if (plane_like) return "y";
            return "tau" + std::to_string(id.index);
        case GenFamily::Star:
        case GenFamily::Plain: {
            std::string base = sphere_like ? "a" : plane_like ? "x" : "alpha";
            base += std::to_string(id.index);
            if (id.family == GenFamily::Star) base += "*";
            return base;
        }
    }
    throw std::logic_error("unreachable");
}

std::optional<GenCode> AlgebraPreset::code_by_name(const std::string& name) const {
    for (GenCode g = 0; g < num_codes_; ++g)
        if (generator_name(g) == name) return g;
    return std::nullopt;
}

bool AlgebraPreset::word_in_normal_form(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (rule(w[i], w[i + 1])) return false;
    return true;
}

std::vector<Relation> AlgebraPreset::defining_relations() const {
    std::vector<Relation> rels;
    auto nm = [this](GenCode g) { return generator_name(g); };

    if (kind_ == PresetKind::EvenSphere || kind_ == PresetKind::OddPlane) {
        const GenCode t = 0;
        auto astar = [](int i) { return static_cast<GenCode>(2 * i - 1); };
        auto a = [](int i) { return static_cast<GenCode>(2 * i); };
        for (int i = 1; i <= n_; ++i) {
            rels.push_back({nm(a(i)) + " " + nm(t) + " = q^2 " + nm(t) + " " + nm(a(i)),
                            {{LaurentQ(1), {a(i), t}}},
                            {{qp(2), {t, a(i)}}}});
            rels.push_back({nm(astar(i)) + " " + nm(t) + " = q^-2 " + nm(t) + " " + nm(astar(i)),
                            {{LaurentQ(1), {astar(i), t}}},
                            {{qp(-2), {t, astar(i)}}}});
        }
        for (int i = 1; i <= n_; ++i) {
            for (int j = i + 1; j <= n_; ++j) {
                rels.push_back({nm(a(i)) + " " + nm(a(j)) + " = q^-1 " + nm(a(j)) + " " + nm(a(i)),
                                {{LaurentQ(1), {a(i), a(j)}}},
                                {{qp(-1), {a(j), a(i)}}}});
                rels.push_back({nm(a(i)) + " " + nm(astar(j)) + " = q^3 " + nm(astar(j)) + " " + nm(a(i)),
                                {{LaurentQ(1), {a(i), astar(j)}}},
                                {{qp(3), {astar(j), a(i)}}}});
                // involution images of the two relations above
                rels.push_back({nm(astar(j)) + " " + nm(astar(i)) + " = q^-1 " + nm(astar(i)) + " " + nm(astar(j)),
                                {{LaurentQ(1), {astar(j), astar(i)}}},
                                {{qp(-1), {astar(i), astar(j)}}}});
                rels.push_back({nm(a(j)) + " " + nm(astar(i)) + " = q^3 " + nm(astar(i)) + " " + nm(a(j)),
                                {{LaurentQ(1), {a(j), astar(i)}}},
                                {{qp(3), {astar(i), a(j)}}}});
            }
        }
        for (int i = 1; i <= n_; ++i) {
            RawPoly rhs{{qp(2), {astar(i), a(i)}}};
            for (int l = 1; l < i; ++l) rhs.push_back({qp(2) * one_minus_q2(), {astar(l), a(l)}});
            rhs.push_back({one_minus_q2(), {t, t}});
            rels.push_back({nm(a(i)) + " " + nm(astar(i)) + " = q^2 " + nm(astar(i)) + " " + nm(a(i)) + " + ...",
                            {{LaurentQ(1), {a(i), astar(i)}}},
                            std::move(rhs)});
        }
        if (kind_ == PresetKind::EvenSphere) {
            RawPoly lhs;
            for (int i = 1; i <= n_; ++i) lhs.push_back({qp(2), {astar(i), a(i)}});
            rels.push_back({"sum q^2 a_i* a_i = t - t^2", std::move(lhs),
                            {{LaurentQ(1), {t}}, {LaurentQ(-1), {t, t}}}});
        }
        return rels;
    }

    auto tau = [](int i) { return static_cast<GenCode>(3 * (i - 1)); };
    auto astar = [](int i) { return static_cast<GenCode>(3 * (i - 1) + 1); };
    auto alpha = [](int i) { return static_cast<GenCode>(3 * (i - 1) + 2); };
    for (int i = 1; i <= n_; ++i) {
        rels.push_back({nm(alpha(i)) + " " + nm(tau(i)) + " = q^2 " + nm(tau(i)) + " " + nm(alpha(i)),
                        {{LaurentQ(1), {alpha(i), tau(i)}}},
                        {{qp(2), {tau(i), alpha(i)}}}});
        rels.push_back({"q^2 " + nm(astar(i)) + " " + nm(alpha(i)) + " = " + nm(tau(i)) + "(1 - " + nm(tau(i)) + ")",
                        {{qp(2), {astar(i), alpha(i)}}},
                        {{LaurentQ(1), {tau(i)}}, {LaurentQ(-1), {tau(i), tau(i)}}}});
        rels.push_back({nm(alpha(i)) + " " + nm(astar(i)) + " = q^2 " + nm(astar(i)) + " " + nm(alpha(i)) + " + (1-q^2) " + nm(tau(i)) + "^2",
                        {{LaurentQ(1), {alpha(i), astar(i)}}},
                        {{qp(2), {astar(i), alpha(i)}}, {one_minus_q2(), {tau(i), tau(i)}}}});
    }
    for (GenCode x = 0; x < num_codes_; ++x)
        for (GenCode y = 0; y < num_codes_; ++y)
            if (x / 3 > y / 3)
                rels.push_back({nm(x) + " " + nm(y) + " = " + nm(y) + " " + nm(x),
                                {{LaurentQ(1), {x, y}}},
                                {{LaurentQ(1), {y, x}}}});
    return rels;
}

}  // namespace qsusp
