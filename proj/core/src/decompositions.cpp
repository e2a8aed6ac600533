#include "beable/decompositions.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>

#include "beable/errors.hpp"

namespace beable {

std::vector<SpectralComponent> spectral_decomposition(const OperatorMatrix& h,
                                                      const ToleranceConfig& tol) {
    if (!is_hermitian(h, std::max(tol.eps_zero, 1e-12)))
        throw InvalidInput("spectral_decomposition: input is not Hermitian");

    Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h);
    const Eigen::VectorXd evals = es.eigenvalues();
    const OperatorMatrix evecs = es.eigenvectors();

    const double radius = evals.size()
                              ? std::max(std::abs(evals(0)), std::abs(evals(evals.size() - 1)))
                              : 0.0;
    const double thr = tol.eps_rank * std::max(radius, 1.0);

    std::vector<SpectralComponent> out;
    Eigen::Index i = 0;
    while (i < evals.size()) {
        Eigen::Index j = i;
        while (j + 1 < evals.size() && evals(j + 1) - evals(j) <= thr) ++j;
        OperatorMatrix p = OperatorMatrix::Zero(h.rows(), h.cols());
        double lam = 0.0;
        for (Eigen::Index k = i; k <= j; ++k) {
            p += evecs.col(k) * evecs.col(k).adjoint();
            lam += evals(k);
        }
        lam /= double(j - i + 1);
        out.push_back({lam, std::move(p)});
        i = j + 1;
    }
    return out;
}

OperatorMatrix apply_spectral(const OperatorMatrix& h,
                              const std::function<Complex(double)>& f,
                              const ToleranceConfig& tol) {
    OperatorMatrix out = OperatorMatrix::Zero(h.rows(), h.cols());
    for (const auto& [lam, p] : spectral_decomposition(h, tol)) out += f(lam) * p;
    return out;
}

OperatorMatrix unitary_exp(const OperatorMatrix& h, double t, const ToleranceConfig& tol) {
    return apply_spectral(
        h, [t](double lam) { return std::exp(Complex(0.0, t * lam)); }, tol);
}

PolarDecomposition polar_decomposition(const OperatorMatrix& t, const ToleranceConfig& tol) {
    const Eigen::Index n = t.rows();
    if (t.norm() <= tol.eps_zero)
        return {OperatorMatrix::Zero(n, n), OperatorMatrix::Zero(n, n)};

    Eigen::JacobiSVD<OperatorMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double smax = sv(0);

    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol.eps_rank * smax) ++rank;

    OperatorMatrix abs_t = svd.matrixV() * sv.asDiagonal() * svd.matrixV().adjoint();
    OperatorMatrix v = svd.matrixU().leftCols(rank) * svd.matrixV().leftCols(rank).adjoint();
    return {std::move(v), std::move(abs_t)};
}

std::pair<OperatorMatrix, OperatorMatrix> find_noncommuting_projections(
    const StarAlgebra& b, const ToleranceConfig& tol) {
    if (b.is_abelian(tol.eps_zero))
        throw AbelianAlgebra("find_noncommuting_projections: algebra is abelian");

    // Candidate projections: spectral projections of the Hermitian and
    // anti-Hermitian parts of every basis element (nontrivial ones only).
    std::vector<OperatorMatrix> candidates;
    const Complex im(0.0, 1.0);
    for (const auto& g : b.basis) {
        const OperatorMatrix parts[2] = {(g + g.adjoint()) / 2.0,
                                         (g - g.adjoint()) / (2.0 * im)};
        for (const auto& h : parts) {
            if (h.norm() <= tol.eps_zero) continue;
            for (const auto& [lam, p] : spectral_decomposition(h, tol)) {
                (void)lam;
                const double r = p.trace().real();
                if (r > 0.5 && r < double(b.ambient_dim) - 0.5) candidates.push_back(p);
            }
        }
    }

    double best = 0.0;
    std::pair<OperatorMatrix, OperatorMatrix> result;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (i == j) continue;
            const double nrm = op_norm(commutator(candidates[i], candidates[j]));
            if (nrm > best) {
                best = nrm;
                result = {candidates[i], candidates[j]};
            }
        }

    if (best <= tol.eps_zero)
        throw AbelianAlgebra("find_noncommuting_projections: no noncommuting pair found");
    return result;
}

}  // namespace beable
