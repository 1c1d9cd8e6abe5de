// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_PRECISION_HPP
#define HZETA_PRECISION_HPP

#include "hzeta/errors.hpp"

namespace hzeta {

/// Working-precision and effort knobs threaded through every numeric
/// operation.  digits >= 31 switches the kernels to double-double.
struct PrecisionContext {
    int digits = 16;              // decimal digits of working precision
    long max_terms = 10'000'000;  // series truncation ceiling
    int quad_depth = 12;          // quadrature refinement levels
    double tol_abs = 1e-10;
    double tol_rel = 1e-10;

    static PrecisionContext standard() { return {}; }

    static PrecisionContext high() {
        PrecisionContext ctx;
        ctx.digits = 32;
        ctx.quad_depth = 14;
        ctx.tol_abs = 1e-24;
        ctx.tol_rel = 1e-24;
        return ctx;
    }

    bool use_dd() const { return digits >= 31; }

    void validate() const {
        if (digits < 15) throw domain_error("PrecisionContext: digits must be >= 15");
        if (max_terms < 100) throw domain_error("PrecisionContext: max_terms must be >= 100");
        if (quad_depth < 4) throw domain_error("PrecisionContext: quad_depth must be >= 4");
        if (tol_abs < 0.0 || tol_rel < 0.0)
            throw domain_error("PrecisionContext: tolerances must be nonnegative");
    }

    /// Convergence target for series/quadrature given a value scale:
    /// max(tol_abs, tol_rel * scale).
    double goal(double scale = 1.0) const {
        double r = tol_rel * scale;
        return tol_abs > r ? tol_abs : r;
    }
};

} // namespace hzeta

#endif // HZETA_PRECISION_HPP
