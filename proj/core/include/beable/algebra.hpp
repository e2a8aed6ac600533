#pragma once

#include <vector>

#include "beable/matrix_ops.hpp"
#include "beable/tolerances.hpp"

namespace beable {

/// A unital *-closed subalgebra of M_n, stored as a basis of its linear
/// span, orthonormal under the trace inner product tr(X* Y).
struct StarAlgebra {
    Eigen::Index ambient_dim = 0;
    std::vector<OperatorMatrix> basis;

    [[nodiscard]] std::size_t dim() const { return basis.size(); }

    /// Coefficients of X against the orthonormal basis.
    [[nodiscard]] Vector coefficients(const OperatorMatrix& x) const;

    /// Orthogonal projection of X onto the span.
    [[nodiscard]] OperatorMatrix project(const OperatorMatrix& x) const;

    /// Frobenius norm of X - project(X); zero iff X lies in the span.
    [[nodiscard]] double membership_residual(const OperatorMatrix& x) const;

    [[nodiscard]] bool contains(const OperatorMatrix& x, double eps_rank) const {
        return membership_residual(x) <= eps_rank * std::max(1.0, x.norm());
    }

    [[nodiscard]] bool is_abelian(double eps_zero) const;

    /// Vectorized orthogonal projector onto the span, an n^2 x n^2 matrix.
    [[nodiscard]] OperatorMatrix span_projector() const;
};

/// Gram-Schmidt over the trace inner product. Directions with residual
/// below eps_rank (relative to the candidate norm) are dropped.
std::vector<OperatorMatrix> orthonormalize(const std::vector<OperatorMatrix>& mats,
                                           double eps_rank);

/// Smallest unital *-closed subalgebra of M_{ambient_dim} containing the
/// generators. Closure alternates adjoints and pairwise products until the
/// span dimension stabilizes; terminates at dim <= ambient_dim^2.
StarAlgebra generate_algebra(const std::vector<OperatorMatrix>& generators,
                             Eigen::Index ambient_dim,
                             const ToleranceConfig& tol = {});

/// Relative commutant {X in M_n : [X, G] = 0 for all G in B}, computed as
/// the joint nullspace of the maps X -> XG - GX.
StarAlgebra commutant(const StarAlgebra& b, const ToleranceConfig& tol = {});

/// Center of B: elements of B commuting with every basis element of B.
StarAlgebra center(const StarAlgebra& b, const ToleranceConfig& tol = {});

/// Operator-norm distance between the span projectors of two algebras.
double subspace_distance(const StarAlgebra& a, const StarAlgebra& b);

/// B conjugated by a unitary: span{U* G U}.
StarAlgebra conjugate(const StarAlgebra& b, const OperatorMatrix& u,
                      const ToleranceConfig& tol = {});

}  // namespace beable
