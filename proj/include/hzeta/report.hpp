// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_REPORT_HPP
#define HZETA_REPORT_HPP

#include <string>
#include <vector>

namespace hzeta {

/// One verified identity instance.
struct IdentityReport {
    std::string id;
    std::string params;
    std::string lhs;
    std::string rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    std::string status; // "pass", "fail", "skipped"
    double elapsed_ms = 0.0;
    std::string method_notes;

    /// Equality on everything except the timing field.
    bool same_result(const IdentityReport& o) const {
        return id == o.id && params == o.params && lhs == o.lhs && rhs == o.rhs &&
               abs_err == o.abs_err && rel_err == o.rel_err && tol == o.tol &&
               status == o.status && method_notes == o.method_notes;
    }
};

struct SuiteSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    int families = 0;
};

struct SuiteResult {
    std::vector<IdentityReport> reports;
    SuiteSummary summary;
    bool all_passed() const { return summary.failed == 0; }
};

std::string reports_to_json(const SuiteResult& result);
SuiteResult reports_from_json(const std::string& json_text);
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

} // namespace hzeta

#endif // HZETA_REPORT_HPP
