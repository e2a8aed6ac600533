#include "beable/witness.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "beable/decompositions.hpp"
#include "beable/errors.hpp"

namespace beable {

void EPRWitness::verify(const ToleranceConfig& tol) const {
    for (double x : expectations)
        if (std::abs(x - 0.5) > std::max(tol.eps_zero, 1e-12) * 100.0)
            throw Error("EPRWitness: expectation deviates from 1/2");
    if (epr_moment_e > tol.eps_zero || epr_moment_f > tol.eps_zero)
        throw Error("EPRWitness: perfect-correlation moment nonzero");
    if (side1.max_modulus <= tol.eps_zero || side2.max_modulus <= tol.eps_zero)
        throw Error("EPRWitness: incommensurability modulus vanished");
}

namespace {

// A partial isometry V in the algebra with VV* orthogonal to V*V and
// V^2 = 0, from the polar decomposition of T = (I - R) S R.
OperatorMatrix nilpotent_isometry(const StarAlgebra& alg, const ToleranceConfig& tol) {
    const auto [r, s] = find_noncommuting_projections(alg, tol);
    const OperatorMatrix t =
        (identity(alg.ambient_dim) - r) * s * r;
    if (t.norm() <= tol.eps_zero)
        throw AbelianAlgebra("theorem1_construct: (I-R)SR vanished");
    return polar_decomposition(t, tol).v;
}

}  // namespace

EPRWitness theorem1_construct(const StarAlgebra& n1, const StarAlgebra& n2,
                              const ToleranceConfig& tol, int max_power) {
    if (n1.ambient_dim != n2.ambient_dim)
        throw DimensionMismatch("theorem1_construct: ambient dimensions differ");
    for (const auto& a : n1.basis)
        for (const auto& b : n2.basis)
            if (commutator(a, b).norm() > std::max(tol.eps_zero, 1e-12) * 10.0)
                throw NonCommutingFactors("theorem1_construct: factors do not commute");

    EPRWitness wit;
    wit.v = nilpotent_isometry(n1, tol);
    wit.w = nilpotent_isometry(n2, tol);

    wit.e1 = wit.v * wit.v.adjoint();
    wit.f1 = (wit.v * wit.v.adjoint() + wit.v.adjoint() * wit.v + wit.v + wit.v.adjoint()) / 2.0;
    wit.e2 = wit.w * wit.w.adjoint();
    wit.f2 = (wit.w * wit.w.adjoint() + wit.w.adjoint() * wit.w + wit.w + wit.w.adjoint()) / 2.0;

    const OperatorMatrix e1e2 = wit.e1 * wit.e2;
    if (e1e2.norm() <= tol.eps_zero)
        throw SchliederFailure("theorem1_construct: E1 E2 = 0");

    // deterministic unit vector in range(E1 E2)
    Eigen::JacobiSVD<OperatorMatrix> svd(e1e2, Eigen::ComputeThinU);
    Vector psi1 = svd.matrixU().col(0);
    // fix the overall phase for reproducibility
    for (Eigen::Index i = 0; i < psi1.size(); ++i)
        if (std::abs(psi1(i)) > 1e-8) {
            psi1 *= std::conj(psi1(i)) / std::abs(psi1(i));
            break;
        }

    Vector psi = psi1 + wit.v.adjoint() * wit.w.adjoint() * psi1;
    psi /= psi.norm();
    wit.psi = psi;
    wit.phi = vector_state(psi);

    const auto& phi = wit.phi;
    wit.expectations[0] = phi(wit.e1).real();
    wit.expectations[1] = phi(wit.e2).real();
    wit.expectations[2] = phi(wit.e1 * wit.e2).real();
    wit.expectations[3] = phi(wit.f1).real();
    wit.expectations[4] = phi(wit.f2).real();
    wit.expectations[5] = phi(wit.f1 * wit.f2).real();

    const OperatorMatrix de = wit.e1 - wit.e2;
    const OperatorMatrix df = wit.f1 - wit.f2;
    wit.epr_moment_e = phi(de * de).real();
    wit.epr_moment_f = phi(df * df).real();

    wit.side1 = commute_in_state(wit.e1, wit.f1, phi, max_power, tol);
    wit.side2 = commute_in_state(wit.e2, wit.f2, phi, max_power, tol);

    wit.verify(tol);
    return wit;
}

}  // namespace beable
