#include "qsusp/ncpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsusp {

void NCPoly::add_term(const Word& w, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const LaurentQ& c, const NCPoly& p) {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, pc] : p.terms_) r.terms_.emplace(w, c * pc);
    return r;
}

RawPoly NCPoly::raw() const {
    RawPoly r;
    r.reserve(terms_.size());
    for (const auto& [w, c] : terms_) r.push_back({c, w});
    return r;
}

namespace {

constexpr std::size_t kNoRedex = static_cast<std::size_t>(-1);

// Finds the redex position per strategy; kNoRedex when the word is normal.
std::size_t find_redex(const Word& w, const AlgebraPreset& A, Strategy s) {
    if (w.size() < 2) return kNoRedex;
    if (s == Strategy::LeftmostFirst) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (A.rule(w[i], w[i + 1])) return i;
    } else {
        for (std::size_t i = w.size() - 1; i-- > 0;)
            if (A.rule(w[i], w[i + 1])) return i;
    }
    return kNoRedex;
}

struct Pending {
    LaurentQ coeff;
    std::size_t depth = 0;
};

}  // namespace

NCPoly normalize(const RawPoly& raw, const AlgebraPreset& A, Strategy strategy, RewriteStats* stats) {
    std::size_t max_len = 0;
    for (const auto& t : raw) max_len = std::max(max_len, t.word.size());
    // Every rewrite decreases (length, lex); along one chain the step count
    // is bounded by inversions plus code-drop moves, quadratic in length
    // with a preset-size factor. Exceeding the budget means a broken table.
    const std::size_t budget = (4 * static_cast<std::size_t>(A.n()) + 8) * (max_len + 2) * (max_len + 2);

    std::map<Word, Pending> pending;
    for (const auto& t : raw) {
        if (t.coeff.is_zero()) continue;
        for (GenCode g : t.word)
            if (g >= A.num_codes()) throw std::out_of_range("normalize: generator not in preset");
        auto [it, fresh] = pending.try_emplace(t.word, Pending{t.coeff, 0});
        if (!fresh) it->second.coeff += t.coeff;
    }

    NCPoly out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        Pending& info = node.mapped();
        if (info.coeff.is_zero()) continue;

        const std::size_t pos = find_redex(w, A, strategy);
        if (pos == kNoRedex) {
            out.add_term(w, info.coeff);
            continue;
        }
        if (info.depth >= budget)
            throw std::logic_error("normalize: rewrite step budget exceeded (non-terminating rule table?)");
        if (stats) {
            stats->words_expanded++;
            stats->max_path_steps = std::max(stats->max_path_steps, info.depth + 1);
        }
        const RawPoly& rhs = *A.rule(w[pos], w[pos + 1]);
        for (const auto& rt : rhs) {
            Word nw;
            nw.reserve(w.size() - 2 + rt.word.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rt.word.begin(), rt.word.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            LaurentQ c = info.coeff * rt.coeff;
            if (c.is_zero()) continue;
            auto it = pending.find(nw);
            if (it == pending.end()) {
                pending.emplace(std::move(nw), Pending{std::move(c), info.depth + 1});
            } else {
                it->second.coeff += c;
                it->second.depth = std::max(it->second.depth, info.depth + 1);
            }
        }
    }
    return out;
}

NCPoly mul(const NCPoly& f, const NCPoly& g, const AlgebraPreset& A, Strategy strategy) {
    RawPoly raw;
    raw.reserve(f.terms().size() * g.terms().size());
    for (const auto& [wf, cf] : f.terms()) {
        for (const auto& [wg, cg] : g.terms()) {
            Word w;
            w.reserve(wf.size() + wg.size());
            w.insert(w.end(), wf.begin(), wf.end());
            w.insert(w.end(), wg.begin(), wg.end());
            raw.push_back({cf * cg, std::move(w)});
        }
    }
    return normalize(raw, A, strategy);
}

NCPoly commutator(const NCPoly& f, const NCPoly& g, const AlgebraPreset& A) {
    return mul(f, g, A) - mul(g, f, A);
}

NCPoly star(const NCPoly& f, const AlgebraPreset& A) {
    RawPoly raw;
    raw.reserve(f.terms().size());
    for (const auto& [w, c] : f.terms()) {
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) sw.push_back(A.star(*it));
        raw.push_back({c, std::move(sw)});
    }
    return normalize(raw, A);
}

LaurentQ epsilon(const NCPoly& f) { return f.scalar_part(); }

std::string to_string(const Word& w, const AlgebraPreset& A) {
    if (w.empty()) return "1";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) out << " ";
        out << A.generator_name(w[i]);
        if (j - i > 1) out << "^" << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

std::string to_string(const NCPoly& f, const AlgebraPreset& A) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        // Single q-power coefficients print inline with an extractable sign;
        // anything longer is parenthesized.
        const bool simple = c.terms().size() == 1;
        bool neg = false;
        std::string coeff_text;
        if (simple) {
            const auto& [k, r] = *c.terms().begin();
            neg = r.sign() < 0;
            const LaurentQ mag = LaurentQ::term(neg ? -r : r, k);
            coeff_text = mag.str();
        } else {
            coeff_text = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (w.empty()) {
            out << coeff_text;
        } else if (coeff_text == "1") {
            out << to_string(w, A);
        } else {
            out << coeff_text << " * " << to_string(w, A);
        }
    }
    return out.str();
}

}  // namespace qsusp
