#include "beable/gns.hpp"

#include <Eigen/Eigenvalues>

namespace beable {

OperatorMatrix GnsRepresentation::represent(const StarAlgebra& a,
                                            const OperatorMatrix& x) const {
    const Vector c = a.coefficients(x);
    OperatorMatrix out = OperatorMatrix::Zero(dim, dim);
    for (std::size_t m = 0; m < pi_basis.size(); ++m)
        out += c(static_cast<Eigen::Index>(m)) * pi_basis[m];
    return out;
}

GnsRepresentation gns_construct(const StarAlgebra& a, const State& phi,
                                const ToleranceConfig& tol) {
    const Eigen::Index k = static_cast<Eigen::Index>(a.basis.size());

    OperatorMatrix gram(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            gram(i, j) = phi(a.basis[static_cast<std::size_t>(i)].adjoint() *
                             a.basis[static_cast<std::size_t>(j)]);
    gram = (gram + gram.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(gram);
    const Eigen::VectorXd evals = es.eigenvalues();
    const double lmax = evals.size() ? evals(evals.size() - 1) : 0.0;

    // quotient out the null space of the GNS inner product
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < evals.size(); ++i)
        if (evals(i) > tol.eps_rank * std::max(lmax, 1.0)) keep.push_back(i);
    const Eigen::Index r = static_cast<Eigen::Index>(keep.size());

    OperatorMatrix c(k, r);  // columns: orthonormal GNS basis in [G_i] coords
    for (Eigen::Index j = 0; j < r; ++j)
        c.col(j) = es.eigenvectors().col(keep[static_cast<std::size_t>(j)]) /
                   std::sqrt(evals(keep[static_cast<std::size_t>(j)]));

    GnsRepresentation gns;
    gns.dim = r;
    gns.pi_basis.reserve(static_cast<std::size_t>(k));
    OperatorMatrix t(k, k);
    for (Eigen::Index m = 0; m < k; ++m) {
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j < k; ++j)
                t(i, j) = phi(a.basis[static_cast<std::size_t>(i)].adjoint() *
                              a.basis[static_cast<std::size_t>(m)] *
                              a.basis[static_cast<std::size_t>(j)]);
        gns.pi_basis.push_back(c.adjoint() * t * c);
    }

    Vector g(k);
    for (Eigen::Index i = 0; i < k; ++i)
        g(i) = phi(a.basis[static_cast<std::size_t>(i)].adjoint());
    gns.omega = c.adjoint() * g;
    return gns;
}

}  // namespace beable
