#pragma once

#include <optional>

#include "beable/matrix_ops.hpp"
#include "beable/tolerances.hpp"

namespace beable {

/// A positive normalized linear functional, represented by its density
/// matrix. Vector states additionally carry the inducing unit vector.
struct State {
    OperatorMatrix density;
    std::optional<Vector> inducing_vector;

    [[nodiscard]] Eigen::Index dim() const { return density.rows(); }

    /// phi(X) = tr(density X).
    [[nodiscard]] Complex operator()(const OperatorMatrix& x) const {
        return (density * x).trace();
    }

    [[nodiscard]] double expect_real(const OperatorMatrix& x) const {
        return (*this)(x).real();
    }

    [[nodiscard]] bool valid(double eps_zero) const;
};

/// The vector state induced by a unit vector.
State vector_state(const Vector& psi, double eps_zero = 1e-10);

State density_state(const OperatorMatrix& rho, double eps_zero = 1e-10);

/// phi_U(X) = phi(U* X U); vector states transform as psi -> U psi.
State state_transform(const State& phi, const OperatorMatrix& u,
                      const ToleranceConfig& tol = {});

}  // namespace beable
