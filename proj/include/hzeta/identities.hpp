// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_IDENTITIES_HPP
#define HZETA_IDENTITIES_HPP

#include "hzeta/precision.hpp"
#include "hzeta/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hzeta {

/// Requested identity id is not in the catalog.
class not_found_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A single runnable instance of an identity (fixed parameters).  The
/// evaluator computes both sides by independent routes and fills the value
/// and error fields of a report.
struct IdentityInstance {
    std::string params;
    double tol;
    std::function<void(const PrecisionContext&, IdentityReport&)> eval;
};

/// An identity family: one catalog id, a mathematical statement, the
/// method note documenting the two routes, and a default parameter grid.
struct IdentityFamily {
    std::string id;
    std::string statement;
    std::string method_notes;
    std::vector<IdentityInstance> instances;
};

/// Registry of every identity the library can machine-verify.
class IdentityCatalog {
public:
    static const IdentityCatalog& instance();

    const std::vector<IdentityFamily>& families() const { return families_; }
    bool has(const std::string& id) const;
    const IdentityFamily& family(const std::string& id) const; // throws not_found_error

    /// Run one instance (exact parameter-string match within the family).
    IdentityReport run_identity(const std::string& id, const std::string& params,
                                const PrecisionContext& ctx) const;

    /// Run every instance of every family matching the filter ("" or "*"
    /// matches all; a trailing '*' matches by prefix; otherwise exact id).
    /// jobs > 1 runs instances concurrently; report order is fixed by the
    /// catalog regardless of scheduling.
    SuiteResult run_suite(const std::string& filter, const PrecisionContext& ctx,
                          int jobs = 1) const;

private:
    IdentityCatalog();
    std::vector<IdentityFamily> families_;
};

} // namespace hzeta

#endif // HZETA_IDENTITIES_HPP
