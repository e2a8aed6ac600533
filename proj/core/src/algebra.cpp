#include "beable/algebra.hpp"

#include <Eigen/SVD>

#include "beable/errors.hpp"

namespace beable {

Vector StarAlgebra::coefficients(const OperatorMatrix& x) const {
    Vector c(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        c(static_cast<Eigen::Index>(i)) = trace_inner(basis[i], x);
    return c;
}

OperatorMatrix StarAlgebra::project(const OperatorMatrix& x) const {
    OperatorMatrix p = OperatorMatrix::Zero(ambient_dim, ambient_dim);
    for (const auto& g : basis) p += trace_inner(g, x) * g;
    return p;
}

double StarAlgebra::membership_residual(const OperatorMatrix& x) const {
    return (x - project(x)).norm();
}

bool StarAlgebra::is_abelian(double eps_zero) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (commutator(basis[i], basis[j]).norm() > eps_zero) return false;
    return true;
}

OperatorMatrix StarAlgebra::span_projector() const {
    const Eigen::Index n2 = ambient_dim * ambient_dim;
    OperatorMatrix p = OperatorMatrix::Zero(n2, n2);
    for (const auto& g : basis) {
        const Vector v = vec(g);
        p += v * v.adjoint();
    }
    return p;
}

std::vector<OperatorMatrix> orthonormalize(const std::vector<OperatorMatrix>& mats,
                                           double eps_rank) {
    std::vector<OperatorMatrix> out;
    for (const auto& m : mats) {
        OperatorMatrix r = m;
        // two rounds of modified Gram-Schmidt for numerical stability
        for (int round = 0; round < 2; ++round)
            for (const auto& b : out) r -= trace_inner(b, r) * b;
        const double nrm = r.norm();
        if (nrm > std::max(eps_rank * std::max(1.0, m.norm()), 1e-14)) out.push_back(r / nrm);
    }
    return out;
}

namespace {

// Extend an orthonormal family in place with any new directions found in
// the candidates. Returns the number of directions added.
std::size_t extend_orthonormal(std::vector<OperatorMatrix>& basis,
                               const std::vector<OperatorMatrix>& candidates,
                               double eps_rank) {
    std::size_t added = 0;
    for (const auto& m : candidates) {
        OperatorMatrix r = m;
        for (int round = 0; round < 2; ++round)
            for (const auto& b : basis) r -= trace_inner(b, r) * b;
        const double nrm = r.norm();
        if (nrm > std::max(eps_rank * std::max(1.0, m.norm()), 1e-14)) {
            basis.push_back(r / nrm);
            ++added;
        }
    }
    return added;
}

}  // namespace

StarAlgebra generate_algebra(const std::vector<OperatorMatrix>& generators,
                             Eigen::Index ambient_dim, const ToleranceConfig& tol) {
    for (const auto& g : generators)
        if (g.rows() != ambient_dim || g.cols() != ambient_dim)
            throw DimensionMismatch("generate_algebra: generator dimension mismatch");

    StarAlgebra alg;
    alg.ambient_dim = ambient_dim;
    alg.basis.push_back(identity(ambient_dim) / std::sqrt(double(ambient_dim)));

    std::vector<OperatorMatrix> seed;
    for (const auto& g : generators) {
        seed.push_back(g);
        seed.push_back(g.adjoint());
    }
    extend_orthonormal(alg.basis, seed, tol.eps_rank);

    const std::size_t max_dim = static_cast<std::size_t>(ambient_dim * ambient_dim);
    while (alg.basis.size() < max_dim) {
        std::vector<OperatorMatrix> candidates;
        candidates.reserve(alg.basis.size() * (alg.basis.size() + 1));
        for (const auto& a : alg.basis) candidates.push_back(a.adjoint());
        for (const auto& a : alg.basis)
            for (const auto& b : alg.basis) candidates.push_back(a * b);
        if (extend_orthonormal(alg.basis, candidates, tol.eps_rank) == 0) break;
    }
    return alg;
}

namespace {

StarAlgebra algebra_from_vecs(const OperatorMatrix& cols, Eigen::Index ambient_dim,
                              const ToleranceConfig& tol) {
    std::vector<OperatorMatrix> mats;
    mats.reserve(static_cast<std::size_t>(cols.cols()));
    for (Eigen::Index j = 0; j < cols.cols(); ++j)
        mats.push_back(unvec(cols.col(j), ambient_dim));
    StarAlgebra alg;
    alg.ambient_dim = ambient_dim;
    alg.basis = orthonormalize(mats, tol.eps_rank);
    return alg;
}

}  // namespace

StarAlgebra commutant(const StarAlgebra& b, const ToleranceConfig& tol) {
    const Eigen::Index n = b.ambient_dim;
    const Eigen::Index n2 = n * n;
    const Eigen::Index k = static_cast<Eigen::Index>(b.basis.size());

    // vec(XG - GX) = (G^T kron I - I kron G) vec(X)
    OperatorMatrix stacked(k * n2, n2);
    for (Eigen::Index i = 0; i < k; ++i) {
        const OperatorMatrix& g = b.basis[static_cast<std::size_t>(i)];
        stacked.middleRows(i * n2, n2) =
            kron(g.transpose(), identity(n)) - kron(identity(n), g);
    }

    Eigen::JacobiSVD<OperatorMatrix> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol.eps_rank * std::max(smax, 1.0)) ++rank;

    const OperatorMatrix null_cols = svd.matrixV().rightCols(n2 - rank);
    return algebra_from_vecs(null_cols, n, tol);
}

StarAlgebra center(const StarAlgebra& b, const ToleranceConfig& tol) {
    const Eigen::Index n = b.ambient_dim;
    const Eigen::Index k = static_cast<Eigen::Index>(b.basis.size());
    const Eigen::Index n2 = n * n;

    // Restrict the commutation conditions to coordinates within B.
    OperatorMatrix m(k * n2, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const OperatorMatrix& gi = b.basis[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < k; ++j)
            m.block(j * n2, i, n2, 1) =
                vec(commutator(gi, b.basis[static_cast<std::size_t>(j)]));
    }

    Eigen::JacobiSVD<OperatorMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol.eps_rank * std::max(smax, 1.0)) ++rank;

    const OperatorMatrix coeffs = svd.matrixV().rightCols(k - rank);
    std::vector<OperatorMatrix> mats;
    for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
        OperatorMatrix x = OperatorMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < k; ++i)
            x += coeffs(i, c) * b.basis[static_cast<std::size_t>(i)];
        mats.push_back(x);
    }
    StarAlgebra z;
    z.ambient_dim = n;
    z.basis = orthonormalize(mats, tol.eps_rank);
    return z;
}

double subspace_distance(const StarAlgebra& a, const StarAlgebra& b) {
    return op_norm(a.span_projector() - b.span_projector());
}

StarAlgebra conjugate(const StarAlgebra& b, const OperatorMatrix& u,
                      const ToleranceConfig& tol) {
    std::vector<OperatorMatrix> mats;
    mats.reserve(b.basis.size());
    for (const auto& g : b.basis) mats.push_back(u.adjoint() * g * u);
    StarAlgebra out;
    out.ambient_dim = b.ambient_dim;
    out.basis = orthonormalize(mats, tol.eps_rank);
    return out;
}

}  // namespace beable
