#pragma once

#include <vector>

#include "beable/algebra.hpp"
#include "beable/states.hpp"

namespace beable {

/// GNS representation of a finite-dimensional algebra induced by a state:
/// the algebra acting by left multiplication on its quotient by the null
/// space of the state's inner product, with cyclic vector Omega = [I].
struct GnsRepresentation {
    Eigen::Index dim = 0;                   ///< dimension of the GNS space
    std::vector<OperatorMatrix> pi_basis;   ///< images of the algebra basis
    Vector omega;                           ///< cyclic vector

    /// pi(X) for X (projected onto) the algebra.
    [[nodiscard]] OperatorMatrix represent(const StarAlgebra& a,
                                           const OperatorMatrix& x) const;
};

GnsRepresentation gns_construct(const StarAlgebra& a, const State& phi,
                                const ToleranceConfig& tol = {});

}  // namespace beable
