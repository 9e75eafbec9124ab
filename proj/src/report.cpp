#include "qsusp/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace qsusp {

void VerificationReport::sort_by_id() {
    std::stable_sort(cases.begin(), cases.end(),
                     [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
}

namespace {

nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases) {
        nlohmann::json jc{{"id", c.id},
                          {"status", c.pass ? "pass" : "fail"},
                          {"residual", c.residual},
                          {"runtime", c.runtime_s}};
        if (!c.note.empty()) jc["note"] = c.note;
        cases.push_back(std::move(jc));
    }
    return nlohmann::json{{"suite", r.suite},
                          {"status", r.ok() ? "pass" : "fail"},
                          {"cases", std::move(cases)}};
}

}  // namespace

std::string VerificationReport::to_json() const {
    nlohmann::json j = report_json(*this);
    j["schema"] = 1;
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << ": " << (ok() ? "pass" : "FAIL") << "\n";
    for (const auto& c : cases) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << "  residual=" << c.residual
            << "  t=" << c.runtime_s << "s";
        if (!c.note.empty()) out << "  (" << c.note << ")";
        out << "\n";
    }
    return out.str();
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
        all = all && r.ok();
    }
    return nlohmann::json{{"schema", 1}, {"status", all ? "pass" : "fail"}, {"suites", arr}}.dump(2);
}

}  // namespace qsusp
