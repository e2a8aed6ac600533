#include "beable/classicality.hpp"

#include "beable/nnls.hpp"

namespace beable {

ClassicalityCertificate classicality_check(const State& phi, const StarAlgebra& b,
                                           const ToleranceConfig& tol) {
    return classicality_check(phi, b, characters(b, tol), tol);
}

ClassicalityCertificate classicality_check(const State& phi, const StarAlgebra& b,
                                           const std::vector<Character>& chars,
                                           const ToleranceConfig& tol) {
    ClassicalityCertificate cert;
    cert.n_characters = chars.size();

    const Eigen::Index nb = static_cast<Eigen::Index>(b.basis.size());
    const Eigen::Index k = static_cast<Eigen::Index>(chars.size());

    // Constraint rows: Re and Im of each basis expectation, plus sum-to-one.
    Eigen::MatrixXd a(2 * nb + 1, std::max<Eigen::Index>(k, 1));
    Eigen::VectorXd rhs(2 * nb + 1);
    a.setZero();
    for (Eigen::Index i = 0; i < nb; ++i) {
        const Complex target = phi(b.basis[static_cast<std::size_t>(i)]);
        rhs(2 * i) = target.real();
        rhs(2 * i + 1) = target.imag();
        for (Eigen::Index j = 0; j < k; ++j) {
            const Complex v = chars[static_cast<std::size_t>(j)].values[static_cast<std::size_t>(i)];
            a(2 * i, j) = v.real();
            a(2 * i + 1, j) = v.imag();
        }
    }
    rhs(2 * nb) = 1.0;
    for (Eigen::Index j = 0; j < k; ++j) a(2 * nb, j) = 1.0;

    if (chars.empty()) {
        cert.classical = false;
        cert.residual = rhs.lpNorm<Eigen::Infinity>();
        return cert;
    }

    const NnlsResult sol = nnls(a, rhs);
    cert.residual = (a * sol.x - rhs).lpNorm<Eigen::Infinity>();
    cert.classical = cert.residual <= tol.eps_feas;
    if (cert.classical) {
        std::vector<double> w(sol.x.data(), sol.x.data() + sol.x.size());
        // renormalize away feasibility slack
        double s = 0.0;
        for (double& wi : w) s += wi;
        if (s > 0.0)
            for (double& wi : w) wi /= s;
        cert.weights = std::move(w);
    }
    return cert;
}

}  // namespace beable
