#include "qsusp/fockrep.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace qsusp {

namespace {

void require_even_sphere(const AlgebraPreset& A) {
    if (A.kind() != PresetKind::EvenSphere)
        throw std::invalid_argument("fockrep: EvenSphere preset required");
}

// Applies one generator to a multi-index in place, returning the amplitude
// factor; 0.0 signals annihilation or leaving the truncation.
double apply_letter(std::vector<int>& idx, GenCode g, int n, int N, double q0) {
    if (g == 0) {  // t = prod tau_j
        int total = 0;
        for (int j = 0; j < n; ++j) total += idx[static_cast<std::size_t>(j)];
        return std::pow(q0, 2 * total);
    }
    const int i = (g + 1) / 2;          // slot, 1-based
    const bool raising = g % 2 == 1;    // a_i*
    double amp = 1.0;
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        const int kj = idx[static_cast<std::size_t>(j - 1)];
        amp *= j > i ? std::pow(q0, 2 * kj) : std::pow(q0, kj);  // tau vs tau^{1/2}
    }
    int& ki = idx[static_cast<std::size_t>(i - 1)];
    if (raising) {
        if (ki + 1 >= N) return 0.0;
        amp *= std::pow(q0, ki) * std::sqrt(1.0 - std::pow(q0, 2 * (ki + 1)));
        ki += 1;
    } else {
        if (ki == 0) return 0.0;
        amp *= std::pow(q0, ki - 1) * std::sqrt(1.0 - std::pow(q0, 2 * ki));
        ki -= 1;
    }
    return amp;
}

// Walks one column through the word (rightmost letter first); returns the
// target row or -1 when the column is annihilated.
std::int64_t walk_column(const Word& w, std::int64_t col, const TruncatedFock& space, double q0,
                         int n, double& amp_out) {
    std::vector<int> idx = space.unflatten(col);
    double amp = 1.0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        amp *= apply_letter(idx, *it, n, space.levels, q0);
        if (amp == 0.0) return -1;
    }
    amp_out = amp;
    return space.flatten(idx);
}

}  // namespace

double q_pochhammer(double alpha, double q0, int s) {
    double p = 1.0;
    for (int j = 1; j <= s; ++j) p *= 1.0 - std::pow(q0, j - 1) * alpha;
    return p;
}

SparseOperator sigma1(PodlesOp sym, double q0, int N) {
    if (!(q0 > 0.0 && q0 < 1.0) || N < 2) throw std::invalid_argument("sigma1: need 0 < q < 1, N >= 2");
    SparseOperator op(TruncatedFock(1, N));
    switch (sym) {
        case PodlesOp::Alpha:
            for (int k = 1; k < N; ++k)
                op.add_entry(k - 1, k, std::pow(q0, k - 1) * std::sqrt(1.0 - std::pow(q0, 2 * k)));
            break;
        case PodlesOp::AlphaStar:
            for (int k = 0; k + 1 < N; ++k)
                op.add_entry(k + 1, k, std::pow(q0, k) * std::sqrt(1.0 - std::pow(q0, 2 * (k + 1))));
            break;
        case PodlesOp::Tau:
            for (int k = 0; k < N; ++k) op.add_entry(k, k, std::pow(q0, 2 * k));
            break;
        case PodlesOp::SqrtTau:
            for (int k = 0; k < N; ++k) op.add_entry(k, k, std::pow(q0, k));
            break;
    }
    return op;
}

SparseOperator represent_word_serial(const Word& w, const AlgebraPreset& A, double q0, int N) {
    require_even_sphere(A);
    const TruncatedFock space(A.n(), N);
    SparseOperator op(space);
    const std::int64_t d = space.dim();
    for (std::int64_t col = 0; col < d; ++col) {
        double amp = 0.0;
        const std::int64_t row = walk_column(w, col, space, q0, A.n(), amp);
        if (row >= 0) op.add_entry(row, col, amp);
    }
    return op;
}

SparseOperator represent_word(const Word& w, const AlgebraPreset& A, double q0, int N) {
    require_even_sphere(A);
    const TruncatedFock space(A.n(), N);
    const std::int64_t d = space.dim();
    std::vector<std::pair<std::int64_t, double>> cols(static_cast<std::size_t>(d), {-1, 0.0});
#pragma omp parallel for schedule(static)
    for (std::int64_t col = 0; col < d; ++col) {
        double amp = 0.0;
        const std::int64_t row = walk_column(w, col, space, q0, A.n(), amp);
        if (row >= 0) cols[static_cast<std::size_t>(col)] = {row, amp};
    }
    SparseOperator op(space);
    for (std::int64_t col = 0; col < d; ++col) {
        const auto& [row, amp] = cols[static_cast<std::size_t>(col)];
        if (row >= 0) op.add_entry(row, col, amp);
    }
    return op;
}

SparseOperator represent_raw(const RawPoly& raw, const AlgebraPreset& A, double q0, int N) {
    require_even_sphere(A);
    SparseOperator out{TruncatedFock(A.n(), N)};
    for (const auto& term : raw) {
        const double c = term.coeff.eval(q0);
        if (c == 0.0) continue;
        out += c * represent_word(term.word, A, q0, N);
    }
    return out;
}

SparseOperator represent(const NCPoly& f, const AlgebraPreset& A, double q0, int N) {
    return represent_raw(f.raw(), A, q0, N);
}

std::vector<double> apply_word(const Word& w, const AlgebraPreset& A, double q0, int N,
                               const std::vector<double>& x) {
    require_even_sphere(A);
    const TruncatedFock space(A.n(), N);
    const std::int64_t d = space.dim();
    if (static_cast<std::int64_t>(x.size()) != d)
        throw std::invalid_argument("apply_word: dimension mismatch");
    std::vector<double> y(static_cast<std::size_t>(d), 0.0);
    for (std::int64_t col = 0; col < d; ++col) {
        if (x[static_cast<std::size_t>(col)] == 0.0) continue;
        double amp = 0.0;
        const std::int64_t row = walk_column(w, col, space, q0, A.n(), amp);
        if (row >= 0) y[static_cast<std::size_t>(row)] += amp * x[static_cast<std::size_t>(col)];
    }
    return y;
}

namespace {

// Per-slot factor lists of one word: the word is a product of Kronecker
// factors, so its trace is the product of per-slot traces.
std::vector<std::vector<PodlesOp>> slot_ops(const Word& w, int n) {
    std::vector<std::vector<PodlesOp>> slots(static_cast<std::size_t>(n));
    for (GenCode gcode : w) {
        if (gcode == 0) {
            for (auto& s : slots) s.push_back(PodlesOp::Tau);
        } else {
            const int i = (gcode + 1) / 2;
            for (int j = 1; j <= n; ++j) {
                auto& s = slots[static_cast<std::size_t>(j - 1)];
                if (j == i)
                    s.push_back(gcode % 2 == 1 ? PodlesOp::AlphaStar : PodlesOp::Alpha);
                else
                    s.push_back(j > i ? PodlesOp::Tau : PodlesOp::SqrtTau);
            }
        }
    }
    return slots;
}

bool slots_balanced(const std::vector<std::vector<PodlesOp>>& slots) {
    for (const auto& s : slots) {
        int shift = 0;
        for (PodlesOp op : s) {
            if (op == PodlesOp::Alpha) shift -= 1;
            if (op == PodlesOp::AlphaStar) shift += 1;
        }
        if (shift != 0) return false;
    }
    return true;
}

// |<k|W_s|k>| <= q^{E (k-L) - L} for k >= L and <= 1 below, where L counts
// the shift factors and E the total q-weight per level. The word tail is a
// union bound over "some slot index >= N", inflated slightly so float
// rounding can never cut below the true error.
double word_tail_bound(const std::vector<std::vector<PodlesOp>>& slots, double q0, int N) {
    const int n = static_cast<int>(slots.size());
    std::vector<double> slot_tail(static_cast<std::size_t>(n));
    std::vector<double> slot_total(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        int L = 0, E = 0;
        for (PodlesOp op : slots[static_cast<std::size_t>(s)]) {
            switch (op) {
                case PodlesOp::Tau: E += 2; break;
                case PodlesOp::SqrtTau: E += 1; break;
                default:
                    E += 1;
                    L += 1;
            }
        }
        if (N <= L)
            throw std::domain_error("char_trace: truncation too small for a rigorous tail bound");
        const double qe = std::pow(q0, E);
        slot_tail[static_cast<std::size_t>(s)] = std::pow(q0, E * (N - L) - L) / (1.0 - qe);
        slot_total[static_cast<std::size_t>(s)] = L + std::pow(q0, -L) / (1.0 - qe);
    }
    double bound = 0.0;
    for (int s = 0; s < n; ++s) {
        double contrib = slot_tail[static_cast<std::size_t>(s)];
        for (int j = 0; j < n; ++j)
            if (j != s) contrib *= slot_total[static_cast<std::size_t>(j)];
        bound += contrib;
    }
    return bound * (1.0 + 1e-10);
}

double slot_trace(const std::vector<PodlesOp>& ops, double q0, int N) {
    double tr = 0.0;
    for (int k = 0; k < N; ++k) {
        double amp = 1.0;
        int j = k;
        for (auto it = ops.rbegin(); it != ops.rend() && amp != 0.0; ++it) {
            switch (*it) {
                case PodlesOp::Tau: amp *= std::pow(q0, 2 * j); break;
                case PodlesOp::SqrtTau: amp *= std::pow(q0, j); break;
                case PodlesOp::Alpha:
                    if (j == 0) {
                        amp = 0.0;
                    } else {
                        amp *= std::pow(q0, j - 1) * std::sqrt(1.0 - std::pow(q0, 2 * j));
                        j -= 1;
                    }
                    break;
                case PodlesOp::AlphaStar:
                    if (j + 1 >= N) {
                        amp = 0.0;
                    } else {
                        amp *= std::pow(q0, j) * std::sqrt(1.0 - std::pow(q0, 2 * (j + 1)));
                        j += 1;
                    }
                    break;
            }
        }
        if (j == k) tr += amp;
    }
    return tr;
}

// Exact rational slot trace. On a closed path every level edge is crossed
// upward as often as downward, so the square roots pair into exact factors
// (1 - q^{2m}).
Rational slot_trace_exact(const std::vector<PodlesOp>& ops, const Rational& q0, int N) {
    Rational tr(0);
    for (int k = 0; k < N; ++k) {
        bool dead = false;
        int j = k;
        long qexp = 0;
        std::map<int, int> sqrt_count;
        for (auto it = ops.rbegin(); it != ops.rend() && !dead; ++it) {
            switch (*it) {
                case PodlesOp::Tau: qexp += 2 * j; break;
                case PodlesOp::SqrtTau: qexp += j; break;
                case PodlesOp::Alpha:
                    if (j == 0) {
                        dead = true;
                    } else {
                        qexp += j - 1;
                        sqrt_count[j] += 1;
                        j -= 1;
                    }
                    break;
                case PodlesOp::AlphaStar:
                    if (j + 1 >= N) {
                        dead = true;
                    } else {
                        qexp += j;
                        sqrt_count[j + 1] += 1;
                        j += 1;
                    }
                    break;
            }
        }
        if (dead || j != k) continue;
        Rational amp = q0.pow(qexp);
        for (const auto& [m, cnt] : sqrt_count) {
            if (cnt % 2 != 0)
                throw std::logic_error("char_trace_exact: unpaired square-root factor");
            amp *= (Rational(1) - q0.pow(2 * m)).pow(cnt / 2);
        }
        tr += amp;
    }
    return tr;
}

}  // namespace

TailBound char_trace(const NCPoly& f, const AlgebraPreset& A, double q0, int N) {
    require_even_sphere(A);
    const int n = A.n();

    NCPoly g = f;
    g -= NCPoly::scalar(epsilon(f));  // tr(sigma_n - eps) with 1 cancelled exactly

    TailBound out;
    for (const auto& [w, coeff] : g.terms()) {
        const double c0 = coeff.eval(q0);
        if (c0 == 0.0) continue;
        const auto slots = slot_ops(w, n);
        if (!slots_balanced(slots)) continue;  // no diagonal entries, truncated or not

        double word_value = 1.0;
        for (const auto& ops : slots) word_value *= slot_trace(ops, q0, N);
        out.value += c0 * word_value;
        out.bound += std::abs(c0) * word_tail_bound(slots, q0, N);
    }
    return out;
}

TailBoundExact char_trace_exact(const NCPoly& f, const AlgebraPreset& A, const Rational& q0, int N) {
    require_even_sphere(A);
    const int n = A.n();
    const double q0d = q0.to_double();

    NCPoly g = f;
    g -= NCPoly::scalar(epsilon(f));

    TailBoundExact out;
    for (const auto& [w, coeff] : g.terms()) {
        const Rational c0 = coeff.eval(q0);
        if (c0.is_zero()) continue;
        const auto slots = slot_ops(w, n);
        if (!slots_balanced(slots)) continue;

        Rational word_value(1);
        for (const auto& ops : slots) word_value *= slot_trace_exact(ops, q0, N);
        out.value += c0 * word_value;
        const Rational mag = c0.sign() < 0 ? -c0 : c0;
        out.bound += mag.to_double() * word_tail_bound(slots, q0d, N);
    }
    return out;
}

double verify_relations(const AlgebraPreset& A, double q0, int N, int margin) {
    require_even_sphere(A);
    double worst = 0.0;
    for (const auto& rel : A.defining_relations()) {
        SparseOperator D = represent_raw(rel.lhs, A, q0, N);
        D -= represent_raw(rel.rhs, A, q0, N);
        worst = std::max(worst, D.max_safe_column_norm(margin));
    }
    return worst;
}

namespace {

Word star_power_word(const std::vector<int>& m) {
    Word w;
    for (std::size_t j = 0; j < m.size(); ++j)
        for (int r = 0; r < m[j]; ++r) w.push_back(static_cast<GenCode>(2 * (j + 1) - 1));
    return w;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

double lowering_coefficient_check(int i, const std::vector<int>& m, double q0, int N) {
    const int n = static_cast<int>(m.size());
    if (i < 1 || i > n) throw std::out_of_range("lowering_coefficient_check: bad index");
    int total = 0;
    for (int mj : m) total += mj;
    if (total >= N - 1) throw std::domain_error("lowering_coefficient_check: truncation overflow");

    const AlgebraPreset A = AlgebraPreset::even_sphere(n);
    const TruncatedFock space(n, N);
    std::vector<double> vac(static_cast<std::size_t>(space.dim()), 0.0);
    vac[0] = 1.0;

    const std::vector<double> v = apply_word(star_power_word(m), A, q0, N, vac);
    const Word lower_i{static_cast<GenCode>(2 * i)};
    const std::vector<double> lhs = apply_word(lower_i, A, q0, N, v);

    const int mi = m[static_cast<std::size_t>(i - 1)];
    std::vector<double> rhs(lhs.size(), 0.0);
    if (mi > 0) {
        int sum_before = 0, sum_after = 0;
        for (int j = 1; j < i; ++j) sum_before += m[static_cast<std::size_t>(j - 1)];
        for (int j = i + 1; j <= n; ++j) sum_after += m[static_cast<std::size_t>(j - 1)];
        const double coeff = std::pow(q0, 3 * sum_before) * std::pow(q0, 4 * sum_after) *
                             std::pow(q0, 2 * (mi - 1)) * (1.0 - std::pow(q0, 2 * mi));
        std::vector<int> lowered = m;
        lowered[static_cast<std::size_t>(i - 1)] -= 1;
        const std::vector<double> w = apply_word(star_power_word(lowered), A, q0, N, vac);
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = coeff * w[k];
    }

    std::vector<double> diff(lhs.size());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = lhs[k] - rhs[k];
    return norm2(diff);
}

std::vector<double> psi_gram(const std::vector<std::vector<int>>& m_list, int n, double q0, int N) {
    const AlgebraPreset A = AlgebraPreset::even_sphere(n);
    const TruncatedFock space(n, N);
    std::vector<double> vac(static_cast<std::size_t>(space.dim()), 0.0);
    vac[0] = 1.0;

    std::vector<std::vector<double>> psi;
    psi.reserve(m_list.size());
    for (const auto& m : m_list) {
        if (static_cast<int>(m.size()) != n) throw std::invalid_argument("psi_gram: bad multi-index");
        int total = 0;
        for (int mj : m) total += mj;
        if (total >= N - 1) throw std::domain_error("psi_gram: truncation overflow");

        std::vector<double> v = apply_word(star_power_word(m), A, q0, N, vac);
        int half_exp_twice = -2 * total * total;  // 2 * (-(sum m)^2 + sum m_i (m_i+1)/2)
        double poch = 1.0;
        for (int mj : m) {
            half_exp_twice += mj * (mj + 1);
            poch *= q_pochhammer(std::pow(q0, 2), std::pow(q0, 2), mj);
        }
        const double c = std::pow(q0, half_exp_twice / 2.0) / std::sqrt(poch);
        for (double& x : v) x *= c;
        psi.push_back(std::move(v));
    }

    const std::size_t count = psi.size();
    std::vector<double> gram(count * count, 0.0);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            double dot = 0.0;
            for (std::size_t k = 0; k < psi[a].size(); ++k) dot += psi[a][k] * psi[b][k];
            gram[a * count + b] = dot;
        }
    }
    return gram;
}

double identity_deviation(const std::vector<double>& gram) {
    const auto count = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(gram.size()))));
    double worst = 0.0;
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            worst = std::max(worst, std::abs(gram[a * count + b] - (a == b ? 1.0 : 0.0)));
    return worst;
}

}  // namespace qsusp
