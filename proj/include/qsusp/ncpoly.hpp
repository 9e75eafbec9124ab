#pragma once

#include <map>
#include <string>

#include "qsusp/algebra.hpp"

namespace qsusp {

/// Redex selection order. Confluence makes the result independent of the
/// choice; the property suites check exactly that.
enum class Strategy { LeftmostFirst, RightmostFirst };

struct RewriteStats {
    std::size_t max_path_steps = 0;  // longest single reduction chain seen
    std::size_t words_expanded = 0;
};

/// Noncommutative polynomial in normal form: a map from normal-form words
/// to nonzero LaurentQ coefficients. Equality is equality of term maps.
class NCPoly {
public:
    using Terms = std::map<Word, LaurentQ>;

    NCPoly() = default;

    static NCPoly scalar(const LaurentQ& c) {
        NCPoly p;
        if (!c.is_zero()) p.terms_[Word{}] = c;
        return p;
    }
    static NCPoly generator(GenCode g) {
        NCPoly p;
        p.terms_[Word{g}] = LaurentQ(1);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of the empty word.
    LaurentQ scalar_part() const {
        auto it = terms_.find(Word{});
        return it == terms_.end() ? LaurentQ() : it->second;
    }

    void add_term(const Word& w, const LaurentQ& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const LaurentQ& c, const NCPoly& p);
    friend NCPoly operator-(const NCPoly& p) { return LaurentQ(-1) * p; }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    RawPoly raw() const;

private:
    Terms terms_;
};

/// Rewrites a raw polynomial to its unique normal form over the preset.
NCPoly normalize(const RawPoly& raw, const AlgebraPreset& A,
                 Strategy strategy = Strategy::LeftmostFirst, RewriteStats* stats = nullptr);

NCPoly mul(const NCPoly& f, const NCPoly& g, const AlgebraPreset& A,
           Strategy strategy = Strategy::LeftmostFirst);

/// normalize(f g - g f)
NCPoly commutator(const NCPoly& f, const NCPoly& g, const AlgebraPreset& A);

/// The *-involution: reverses each word, stars each generator, renormalizes.
/// Coefficients are real rationals in q, so conjugation leaves them fixed.
NCPoly star(const NCPoly& f, const AlgebraPreset& A);

/// The counit: coefficient of the empty word (all generators map to 0).
LaurentQ epsilon(const NCPoly& f);

/// Canonical text: terms sorted by word, "coeff * t^p a1*^m1 a1^k1 ...".
std::string to_string(const NCPoly& f, const AlgebraPreset& A);

std::string to_string(const Word& w, const AlgebraPreset& A);

}  // namespace qsusp
