#include "beable/characters.hpp"

#include <cmath>
#include <random>

#include "beable/decompositions.hpp"
#include "beable/errors.hpp"

namespace beable {

bool dispersion_free_check(const std::vector<Complex>& values, const StarAlgebra& b,
                           const ToleranceConfig& tol) {
    if (values.size() != b.basis.size()) return false;
    const double eps = std::max(tol.eps_zero, 1e-12) * 100.0;

    auto eval = [&](const Vector& coeffs) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            s += coeffs(static_cast<Eigen::Index>(i)) * values[i];
        return s;
    };

    // unital
    if (std::abs(eval(b.coefficients(identity(b.ambient_dim))) - 1.0) > eps) return false;

    // multiplicative on basis pairs; extends bilinearly to the whole algebra
    for (std::size_t i = 0; i < b.basis.size(); ++i)
        for (std::size_t j = 0; j < b.basis.size(); ++j) {
            const Complex lhs = eval(b.coefficients(b.basis[i] * b.basis[j]));
            if (std::abs(lhs - values[i] * values[j]) > eps) return false;
        }
    return true;
}

namespace {

// Minimal projections of the (abelian) center, found by spectrally
// decomposing a generic Hermitian element. Retries with a fresh draw if an
// eigenvalue collision merged two central components (detected through
// non-square compressed block dimensions).
std::vector<OperatorMatrix> minimal_central_projections(const StarAlgebra& b,
                                                        const StarAlgebra& z,
                                                        const ToleranceConfig& tol) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Complex im(0.0, 1.0);

    for (int attempt = 0; attempt < 5; ++attempt) {
        OperatorMatrix h = OperatorMatrix::Zero(b.ambient_dim, b.ambient_dim);
        for (const auto& g : z.basis)
            h += gauss(rng) * (g + g.adjoint()) / 2.0 + gauss(rng) * (g - g.adjoint()) / (2.0 * im);
        if (h.norm() < 1e-12) h = identity(b.ambient_dim);

        std::vector<OperatorMatrix> projections;
        bool ok = true;
        for (const auto& [lam, p] : spectral_decomposition(h, tol)) {
            (void)lam;
            // compressed block must be a full matrix algebra M_k: dim = k^2
            std::vector<OperatorMatrix> compressed;
            compressed.reserve(b.basis.size());
            for (const auto& g : b.basis) compressed.push_back(p * g * p);
            const std::size_t d = orthonormalize(compressed, tol.eps_rank).size();
            const double k = std::sqrt(double(d));
            if (std::abs(k - std::round(k)) > 1e-6) {
                ok = false;
                break;
            }
            projections.push_back(p);
        }
        if (ok) return projections;
    }
    throw Error("characters: could not separate central components");
}

}  // namespace

std::vector<Character> characters(const StarAlgebra& b, const ToleranceConfig& tol) {
    const StarAlgebra z = center(b, tol);
    const auto projections = minimal_central_projections(b, z, tol);

    std::vector<Character> out;
    for (std::size_t blk = 0; blk < projections.size(); ++blk) {
        const OperatorMatrix& p = projections[blk];
        std::vector<OperatorMatrix> compressed;
        compressed.reserve(b.basis.size());
        for (const auto& g : b.basis) compressed.push_back(p * g * p);
        if (orthonormalize(compressed, tol.eps_rank).size() != 1) continue;  // k > 1: no character

        const double tr_p = p.trace().real();
        Character chi;
        chi.source_block = static_cast<int>(blk);
        chi.values.reserve(b.basis.size());
        for (const auto& g : b.basis) chi.values.push_back((p * g).trace() / tr_p);
        out.push_back(std::move(chi));
    }
    return out;
}

}  // namespace beable
