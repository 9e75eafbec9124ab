#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsusp/confluence.hpp"
#include "qsusp/ktheory.hpp"
#include "qsusp/parser.hpp"
#include "qsusp/semiclassical.hpp"
#include "qsusp/verify.hpp"

using namespace qsusp;

namespace {

struct QValue {
    double value = 0.5;
    bool exact = false;
    Rational rational = Rational(1, 2);
};

QValue parse_q(const std::string& text) {
    QValue q;
    if (text.find('.') == std::string::npos) {
        q.rational = Rational::parse(text);
        q.exact = true;
        q.value = q.rational.to_double();
    } else {
        q.value = std::stod(text);
        q.exact = false;
    }
    if (!(q.value > 0.0 && q.value < 1.0))
        throw std::invalid_argument("q must lie strictly between 0 and 1");
    return q;
}

AlgebraPreset quantum_preset(const std::string& name, int n) {
    if (name == "even-sphere") return AlgebraPreset::even_sphere(n);
    if (name == "odd-plane") return AlgebraPreset::odd_plane(n);
    if (name == "podles") return AlgebraPreset::podles_sphere();
    if (name == "podles-product") return AlgebraPreset::podles_product(n);
    throw std::invalid_argument("unknown quantum preset '" + name + "'");
}

PoissonStructure classical_structure(const std::string& name, int n) {
    if (name == "coinduced") return PoissonStructure::even_sphere_coinduced(n);
    if (name == "product-podles") return PoissonStructure::product_podles(n);
    if (name == "podles-standard") return PoissonStructure::podles_standard();
    if (name == "chart-plane") return PoissonStructure::chart_plane(n);
    throw std::invalid_argument("unknown classical structure '" + name + "'");
}

void emit(const nlohmann::json& j, const std::string& format, const std::string& text) {
    std::cout << j.dump(2) << "\n";
    if (format == "text") std::cerr << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("QSUSPEND_THREADS")) {
#ifdef _OPENMP
        const int t = std::atoi(threads);
        if (t > 0) omp_set_num_threads(t);
#else
        (void)threads;
#endif
    }

    CLI::App app{"qsusp: exact computer algebra for quantum even spheres"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    int n = 1;
    std::string preset = "even-sphere";
    std::string structure = "coinduced";
    std::string q_text = "1/2";
    int trunc = 40;
    int margin = 4;
    std::uint64_t seed = 20240901;
    std::string expr, expr_f, expr_g, suite = "all";
    int k_block = -1;

    auto* cmd_normalize = app.add_subcommand("normalize", "canonical form of an expression");
    cmd_normalize->add_option("--preset", preset, "quantum preset");
    cmd_normalize->add_option("--n", n, "number of index pairs");
    cmd_normalize->add_option("--expr", expr, "expression")->required();

    auto* cmd_comm = app.add_subcommand("commutator", "normalize(f g - g f)");
    cmd_comm->add_option("--preset", preset, "quantum preset");
    cmd_comm->add_option("--n", n, "number of index pairs");
    cmd_comm->add_option("--f", expr_f, "left operand")->required();
    cmd_comm->add_option("--g", expr_g, "right operand")->required();

    auto* cmd_bracket = app.add_subcommand("bracket", "classical Poisson bracket {f,g}");
    cmd_bracket->add_option("--preset", structure, "classical structure");
    cmd_bracket->add_option("--n", n, "number of index pairs");
    cmd_bracket->add_option("--f", expr_f, "left operand")->required();
    cmd_bracket->add_option("--g", expr_g, "right operand")->required();

    auto* cmd_rep = app.add_subcommand("rep", "sparse matrix of sigma_n(expr)");
    cmd_rep->add_option("--n", n, "tensor factors");
    cmd_rep->add_option("--q", q_text, "deformation parameter (rational or float)");
    cmd_rep->add_option("--trunc", trunc, "levels per factor");
    cmd_rep->add_option("--expr", expr, "expression over the even sphere")->required();

    auto* cmd_trace = app.add_subcommand("trace", "character trace tr(sigma_n - eps)");
    cmd_trace->add_option("--n", n, "tensor factors");
    cmd_trace->add_option("--q", q_text, "deformation parameter");
    cmd_trace->add_option("--trunc", trunc, "levels per factor");
    cmd_trace->add_option("--expr", expr, "expression over the even sphere")->required();

    auto* cmd_projector = app.add_subcommand("projector", "entries of G_2n (or e_2k with --k)");
    cmd_projector->add_option("--n", n, "number of index pairs");
    cmd_projector->add_option("--k", k_block, "emit the odd-plane block e_2k instead");

    auto* cmd_pair = app.add_subcommand("pair", "Chern pairings of G_2n");
    cmd_pair->add_option("--n", n, "number of index pairs");
    cmd_pair->add_option("--q", q_text, "deformation parameter");
    cmd_pair->add_option("--trunc", trunc, "levels per factor");

    std::string point_text;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite, "suite name or 'all'");
    cmd_verify->add_option("--n", n, "number of index pairs");
    cmd_verify->add_option("--q", q_text, "deformation parameter");
    cmd_verify->add_option("--trunc", trunc, "levels per factor");
    cmd_verify->add_option("--margin", margin, "safe-subspace margin");
    cmd_verify->add_option("--seed", seed, "seed for sampled grids");
    cmd_verify->add_option("--point", point_text,
                           "JSON array of [re, im] pairs for the pfaffian suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_normalize) {
            const auto A = quantum_preset(preset, n);
            const NCPoly p = parse_quantum(expr, A);
            const std::string canonical = to_string(p, A);
            emit({{"schema", 1}, {"preset", preset}, {"n", A.n()}, {"canonical", canonical}},
                 format, canonical);
        } else if (*cmd_comm) {
            const auto A = quantum_preset(preset, n);
            const NCPoly c = commutator(parse_quantum(expr_f, A), parse_quantum(expr_g, A), A);
            const std::string canonical = to_string(c, A);
            emit({{"schema", 1}, {"preset", preset}, {"n", A.n()}, {"canonical", canonical}},
                 format, canonical);
        } else if (*cmd_bracket) {
            const auto P = classical_structure(structure, n);
            const ClassicalPoly b = P.bracket(parse_classical(expr_f, P), parse_classical(expr_g, P));
            const std::string canonical = b.str(P.vars());
            emit({{"schema", 1}, {"structure", structure}, {"n", P.n()}, {"canonical", canonical}},
                 format, canonical);
        } else if (*cmd_rep) {
            const QValue q = parse_q(q_text);
            const auto A = AlgebraPreset::even_sphere(n);
            const NCPoly p = parse_quantum(expr, A);
            const SparseOperator op = represent(p, A, q.value, trunc);
            const std::int64_t d = op.space().dim();
            std::vector<std::tuple<std::int64_t, std::int64_t, double>> triplets;
            triplets.reserve(op.nnz());
            for (const auto& [key, v] : op.entries()) triplets.emplace_back(key / d, key % d, v);
            std::sort(triplets.begin(), triplets.end());
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [r, c, v] : triplets)
                arr.push_back({{"row", r}, {"col", c}, {"value", v}});
            emit({{"schema", 1}, {"n", n}, {"trunc", trunc}, {"dim", d}, {"triplets", arr}},
                 format, std::to_string(op.nnz()) + " nonzero entries");
        } else if (*cmd_trace) {
            const QValue q = parse_q(q_text);
            const auto A = AlgebraPreset::even_sphere(n);
            const NCPoly p = parse_quantum(expr, A);
            nlohmann::json j{{"schema", 1}, {"n", n}, {"trunc", trunc}};
            std::string text;
            if (q.exact) {
                const auto tb = char_trace_exact(p, A, q.rational, trunc);
                j["value"] = tb.value.to_double();
                j["value_exact"] = tb.value.str();
                j["tail_bound"] = tb.bound;
                text = tb.value.str() + " +/- " + std::to_string(tb.bound);
            } else {
                const auto tb = char_trace(p, A, q.value, trunc);
                j["value"] = tb.value;
                j["tail_bound"] = tb.bound;
                text = std::to_string(tb.value) + " +/- " + std::to_string(tb.bound);
            }
            emit(j, format, text);
        } else if (*cmd_projector) {
            nlohmann::json j{{"schema", 1}, {"n", n}};
            std::string text;
            if (k_block >= 0) {
                const auto P = AlgebraPreset::odd_plane(n);
                const NCMatrix e = build_e(n, k_block);
                j["k"] = k_block;
                j["algebra"] = "odd-plane";
                j["size"] = e.size();
                nlohmann::json rows = nlohmann::json::array();
                for (int i = 0; i < e.size(); ++i) {
                    nlohmann::json row = nlohmann::json::array();
                    for (int c = 0; c < e.size(); ++c) row.push_back(to_string(e.at(i, c), P));
                    rows.push_back(std::move(row));
                }
                j["entries"] = std::move(rows);
                text = "e_" + std::to_string(2 * k_block) + ", size " + std::to_string(e.size());
            } else {
                const auto A = AlgebraPreset::even_sphere(n);
                const NCMatrix g = build_G(n);
                j["algebra"] = "even-sphere";
                j["size"] = g.size();
                nlohmann::json rows = nlohmann::json::array();
                for (int i = 0; i < g.size(); ++i) {
                    nlohmann::json row = nlohmann::json::array();
                    for (int c = 0; c < g.size(); ++c) row.push_back(to_string(g.at(i, c), A));
                    rows.push_back(std::move(row));
                }
                j["entries"] = std::move(rows);
                text = "G_" + std::to_string(2 * n) + ", size " + std::to_string(g.size());
            }
            emit(j, format, text);
        } else if (*cmd_pair) {
            const QValue q = parse_q(q_text);
            const Rational eps = pair_epsilon(n);
            const TailBound charge = pair_charge(n, q.value, trunc);
            emit({{"schema", 1},
                  {"n", n},
                  {"epsilon_pairing", eps.to_double()},
                  {"charge_pairing", charge.value},
                  {"tail_bound", charge.bound}},
                 format,
                 "epsilon " + eps.str() + ", charge " + std::to_string(charge.value) + " +/- " +
                     std::to_string(charge.bound));
        } else if (*cmd_verify) {
            const QValue q = parse_q(q_text);
            VerifyOptions opt;
            opt.n = n;
            opt.q0 = q.value;
            opt.exact_q = q.exact;
            if (q.exact) opt.q0_exact = q.rational;
            opt.trunc = trunc;
            opt.margin = margin;
            opt.seed = seed;
            if (!point_text.empty()) {
                const auto parsed = nlohmann::json::parse(point_text);
                for (const auto& entry : parsed)
                    opt.point.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
            }
            std::vector<VerificationReport> reports;
            if (suite == "all") {
                reports = run_all_suites(opt);
            } else {
                reports.push_back(run_suite(suite, opt));
            }
            bool ok = true;
            std::string text;
            for (const auto& r : reports) {
                ok = ok && r.ok();
                text += r.to_text();
            }
            std::cout << reports_to_json(reports) << "\n";
            if (format == "text") std::cerr << text;
            return ok ? 0 : 2;
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
