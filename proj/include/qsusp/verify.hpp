#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qsusp/rational.hpp"
#include "qsusp/report.hpp"

namespace qsusp {

struct VerifyOptions {
    int n = 1;
    double q0 = 0.5;
    bool exact_q = false;           // q supplied as a rational: exact trace paths
    Rational q0_exact = Rational(1, 2);
    int trunc = 40;
    int margin = 4;
    std::uint64_t seed = 20240901;
    std::vector<std::complex<double>> point;  // pfaffian suite: check here instead of the grid
};

/// The verification suites, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opt);

/// Runs every suite.
std::vector<VerificationReport> run_all_suites(const VerifyOptions& opt);

}  // namespace qsusp
