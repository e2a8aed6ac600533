#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "beable/algebra.hpp"
#include "beable/matrix_ops.hpp"
#include "beable/tolerances.hpp"

namespace beable {

struct SpectralComponent {
    double eigenvalue;
    OperatorMatrix projection;
};

/// Eigenvalue clustering relative to the spectral radius; projections are
/// mutually orthogonal and resolve the identity.
std::vector<SpectralComponent> spectral_decomposition(const OperatorMatrix& h,
                                                      const ToleranceConfig& tol = {});

/// f(H) for Hermitian H via the spectral calculus.
OperatorMatrix apply_spectral(const OperatorMatrix& h,
                              const std::function<Complex(double)>& f,
                              const ToleranceConfig& tol = {});

/// exp(i t H) for Hermitian H.
OperatorMatrix unitary_exp(const OperatorMatrix& h, double t,
                           const ToleranceConfig& tol = {});

struct PolarDecomposition {
    OperatorMatrix v;     ///< partial isometry
    OperatorMatrix abs;   ///< |T| = (T* T)^{1/2}
};

/// T = V |T| with V*V the support projection of |T|. Singular values below
/// eps_rank * sigma_max are treated as zero.
PolarDecomposition polar_decomposition(const OperatorMatrix& t,
                                       const ToleranceConfig& tol = {});

/// A pair of projections R, S in B with maximal commutator operator norm
/// among the spectral projections of the Hermitian parts of B's basis.
/// Throws AbelianAlgebra when B is abelian.
std::pair<OperatorMatrix, OperatorMatrix> find_noncommuting_projections(
    const StarAlgebra& b, const ToleranceConfig& tol = {});

}  // namespace beable
