#include "beable/states.hpp"

#include <Eigen/Eigenvalues>

#include "beable/errors.hpp"

namespace beable {

bool State::valid(double eps_zero) const {
    if (!is_hermitian(density, std::max(eps_zero, 1e-12))) return false;
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(density);
    if (es.eigenvalues().minCoeff() < -eps_zero * density.rows()) return false;
    if (std::abs(density.trace().real() - 1.0) > eps_zero * density.rows()) return false;
    if (inducing_vector &&
        (density - *inducing_vector * inducing_vector->adjoint()).norm() > eps_zero)
        return false;
    return true;
}

State vector_state(const Vector& psi, double eps_zero) {
    if (std::abs(psi.norm() - 1.0) > eps_zero)
        throw InvalidInput("vector_state: vector is not unit length");
    State s;
    s.density = psi * psi.adjoint();
    s.inducing_vector = psi;
    return s;
}

State density_state(const OperatorMatrix& rho, double eps_zero) {
    State s;
    s.density = (rho + rho.adjoint()) / 2.0;
    if (!s.valid(std::max(eps_zero, 1e-9)))
        throw InvalidInput("density_state: not a PSD trace-one matrix");
    return s;
}

State state_transform(const State& phi, const OperatorMatrix& u, const ToleranceConfig& tol) {
    if (!is_unitary(u, std::max(tol.eps_zero, 1e-12)))
        throw InvalidInput("state_transform: U is not unitary");
    State out;
    out.density = u * phi.density * u.adjoint();
    if (phi.inducing_vector) out.inducing_vector = u * (*phi.inducing_vector);
    return out;
}

}  // namespace beable
