#pragma once

#include <optional>
#include <vector>

#include "beable/characters.hpp"
#include "beable/states.hpp"

namespace beable {

/// Outcome of the classicality (beable) decision for a state on a
/// subalgebra: whether the restriction is a mixture of dispersion-free
/// states, the witnessing weights when it is, and the feasibility residual.
struct ClassicalityCertificate {
    bool classical = false;
    std::optional<std::vector<double>> weights;  ///< aligned with characters
    double residual = 0.0;                       ///< max constraint violation
    std::size_t n_characters = 0;
};

/// Decide whether phi is classical on B by a nonnegative least-squares
/// feasibility solve against the characters of B.
ClassicalityCertificate classicality_check(const State& phi, const StarAlgebra& b,
                                           const ToleranceConfig& tol = {});

/// Same decision given an already-enumerated character list.
ClassicalityCertificate classicality_check(const State& phi, const StarAlgebra& b,
                                           const std::vector<Character>& chars,
                                           const ToleranceConfig& tol);

}  // namespace beable
