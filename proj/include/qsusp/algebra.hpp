#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsusp/laurent.hpp"

namespace qsusp {

/// Generator encoding. Codes are small integers whose natural order is the
/// normal-form order of the preset:
///   EvenSphere / OddPlane:  t=0, a_1*=1, a_1=2, a_2*=3, a_2=4, ...
///   Podles product:         tau_1=0, alpha_1*=1, alpha_1=2, tau_2=3, ...
using GenCode = std::uint8_t;
using Word = std::vector<GenCode>;

enum class GenFamily { TLike, Star, Plain };

struct GeneratorId {
    GenFamily family;
    int index;  // 1..n; 0 for the single t/y generator
    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

struct RawTerm {
    LaurentQ coeff;
    Word word;
};
/// Unnormalized noncommutative polynomial (input to the rewrite engine).
using RawPoly = std::vector<RawTerm>;

/// A defining relation lhs = rhs, both sides as raw polynomials.
struct Relation {
    std::string name;
    RawPoly lhs;
    RawPoly rhs;
};

enum class PresetKind { PodlesSphere, PodlesProduct, EvenSphere, OddPlane };

/// Word order used to orient every rewrite rule: length first, then
/// lexicographic on generator codes. Each rule strictly decreases it.
bool word_order_less(const Word& a, const Word& b);

/// One of the fixed algebra presets, together with its oriented rewrite
/// rule table. Rules map an adjacent generator pair to a raw polynomial;
/// a word is in normal form iff no adjacent pair has a rule.
class AlgebraPreset {
public:
    static AlgebraPreset podles_sphere();
    static AlgebraPreset podles_product(int n);
    static AlgebraPreset even_sphere(int n);
    static AlgebraPreset odd_plane(int n);

    PresetKind kind() const { return kind_; }
    int n() const { return n_; }
    int num_codes() const { return num_codes_; }

    const RawPoly* rule(GenCode x, GenCode y) const {
        const auto& r = rules_[static_cast<std::size_t>(x) * num_codes_ + y];
        return r ? &*r : nullptr;
    }

    GenCode star(GenCode g) const;
    GeneratorId id_of(GenCode g) const;
    GenCode code_of(const GeneratorId& id) const;
    std::string generator_name(GenCode g) const;
    /// Inverse of generator_name; empty optional for unknown names.
    std::optional<GenCode> code_by_name(const std::string& name) const;

    bool word_in_normal_form(const Word& w) const;

    /// The defining relations, as stated (unoriented).
    std::vector<Relation> defining_relations() const;

    /// Replaces one rule. Test hook for building corrupted tables.
    void set_rule(GenCode x, GenCode y, RawPoly rhs);

    friend bool operator==(const AlgebraPreset& a, const AlgebraPreset& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_;
    }

private:
    AlgebraPreset(PresetKind kind, int n);
    void add_rule(GenCode x, GenCode y, RawPoly rhs);
    void build_quantum_plane_rules(bool modulus_rule);
    void build_podles_rules();

    PresetKind kind_;
    int n_;
    int num_codes_;
    std::vector<std::optional<RawPoly>> rules_;
};

}  // namespace qsusp
