#pragma once

namespace beable {

/// Numerical tolerance policy shared across the toolkit.
///
/// eps_zero decides equality-to-zero of scalars and operator norms,
/// eps_rank decides rank/span/clustering questions, and eps_feas bounds
/// residuals of the linear-feasibility (classicality) solves.
struct ToleranceConfig {
    double eps_zero = 1e-10;
    double eps_rank = 1e-9;
    double eps_feas = 1e-8;

    // Negative tolerances are rejected at config ingestion; zero is allowed
    // so that a deliberately corrupted tolerance shows up as failing checks
    // rather than a usage error.
    [[nodiscard]] bool valid() const {
        return eps_zero >= 0.0 && eps_rank >= 0.0 && eps_feas >= 0.0 &&
               eps_zero <= eps_feas;
    }
};

}  // namespace beable
