#pragma once

#include <string>
#include <vector>

namespace qsusp {

struct CaseResult {
    std::string id;
    bool pass = false;
    double residual = 0.0;  // residual or bound, whichever the case reports
    double runtime_s = 0.0;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool ok() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }

    /// Deterministic order regardless of how cases were produced.
    void sort_by_id();

    /// Versioned machine-readable form ("schema": 1).
    std::string to_json() const;

    /// One human line per case.
    std::string to_text() const;
};

std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace qsusp
