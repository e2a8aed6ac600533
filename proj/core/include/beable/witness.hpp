#pragma once

#include <map>
#include <tuple>

#include "beable/epr.hpp"

namespace beable {

/// Output of the constructive EPR-state existence argument for two
/// mutually commuting non-abelian factors: partial isometries V, W, the
/// four projections, the inducing vector and state, and the commutator
/// moduli witnessing incommensurability.
struct EPRWitness {
    OperatorMatrix v, w;
    OperatorMatrix e1, f1, e2, f2;
    Vector psi;
    State phi;

    double expectations[6] = {};  ///< phi of E1, E2, E1E2, F1, F2, F1F2
    double epr_moment_e = 0.0;    ///< phi((E1 - E2)^2)
    double epr_moment_f = 0.0;    ///< phi((F1 - F2)^2)
    StateCommutationResult side1, side2;  ///< moduli of [E1,F1], [E2,F2] in phi

    /// All postconditions at once; throws on violation.
    void verify(const ToleranceConfig& tol) const;
};

/// Builds an EPR state for incommensurable projection pairs out of two
/// mutually commuting non-abelian subalgebras, following the polar-
/// decomposition construction. The unit vector in range(E1 E2) is chosen
/// deterministically as the top left singular vector.
EPRWitness theorem1_construct(const StarAlgebra& n1, const StarAlgebra& n2,
                              const ToleranceConfig& tol = {}, int max_power = 4);

}  // namespace beable
