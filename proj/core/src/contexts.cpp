#include "beable/contexts.hpp"

#include <Eigen/SVD>
#include <random>

#include "beable/decompositions.hpp"
#include "beable/errors.hpp"

namespace beable {

namespace {

// Orthonormal (real) basis of the Hermitian part of a *-closed span.
std::vector<OperatorMatrix> hermitian_basis(const std::vector<OperatorMatrix>& span) {
    const Complex im(0.0, 1.0);
    std::vector<OperatorMatrix> out;
    auto push = [&](OperatorMatrix h) {
        for (const auto& b : out) {
            const double c = (b.adjoint() * h).trace().real();
            h -= c * b;
        }
        const double nrm = h.norm();
        if (nrm > 1e-10) out.push_back(h / nrm);
    };
    for (const auto& g : span) {
        push((g + g.adjoint()) / 2.0);
        push((g - g.adjoint()) / (2.0 * im));
    }
    return out;
}

}  // namespace

std::vector<OperatorMatrix> sample_context_symmetries(const MeasurementContext& ctx,
                                                      int n, std::uint64_t seed,
                                                      const ToleranceConfig& tol) {
    if (!ctx.state.inducing_vector)
        throw InvalidInput("sample_context_symmetries: vector state required");
    const Vector& psi = *ctx.state.inducing_vector;
    const Eigen::Index dim = ctx.state.dim();

    const StarAlgebra ca = generate_algebra({ctx.measured}, dim, tol);
    const StarAlgebra comm = commutant(ca, tol);
    const auto herm = hermitian_basis(comm.basis);
    if (herm.empty()) throw EmptySymmetryFamily("no Hermitian directions in commutant");

    // linear constraint K psi = 0 on the real coefficients
    const Eigen::Index k = static_cast<Eigen::Index>(herm.size());
    Eigen::MatrixXd constraint(2 * dim, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        const Vector hv = herm[static_cast<std::size_t>(j)] * psi;
        constraint.col(j).head(dim) = hv.real();
        constraint.col(j).tail(dim) = hv.imag();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraint, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol.eps_rank * std::max(smax, 1.0)) ++rank;
    const Eigen::Index null_dim = k - rank;
    if (null_dim <= 0)
        throw EmptySymmetryFamily("constrained symmetry space is zero-dimensional");
    const Eigen::MatrixXd null_basis = svd.matrixV().rightCols(null_dim);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<OperatorMatrix> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        Eigen::VectorXd g(null_dim);
        for (Eigen::Index i = 0; i < null_dim; ++i) g(i) = gauss(rng);
        const Eigen::VectorXd c = null_basis * g;
        OperatorMatrix kmat = OperatorMatrix::Zero(dim, dim);
        for (Eigen::Index i = 0; i < k; ++i)
            kmat += c(i) * herm[static_cast<std::size_t>(i)];
        const double nrm = kmat.norm();
        if (nrm > 1e-12) kmat /= nrm;
        out.push_back(unitary_exp(kmat, 1.0, tol));
    }
    return out;
}

BeableReport check_beable_subalgebra(const StarAlgebra& b, const MeasurementContext& ctx,
                                     int n_symmetry_samples, std::uint64_t seed,
                                     const ToleranceConfig& tol) {
    BeableReport report;

    const auto cert = classicality_check(ctx.state, b, tol);
    report.beable_ok = cert.classical;
    report.classicality_residual = cert.residual;

    report.a_priv_ok = b.contains(ctx.measured, tol.eps_rank);
    if (report.a_priv_ok)
        for (const auto& [lam, p] : spectral_decomposition(ctx.measured, tol)) {
            (void)lam;
            if (!b.contains(p, tol.eps_rank)) {
                report.a_priv_ok = false;
                break;
            }
        }

    try {
        const auto symmetries =
            sample_context_symmetries(ctx, n_symmetry_samples, seed, tol);
        report.def_samples = static_cast<int>(symmetries.size());
        for (const auto& u : symmetries) {
            const double dist = subspace_distance(conjugate(b, u, tol), b);
            report.max_def_violation = std::max(report.max_def_violation, dist);
        }
        report.def_ok = report.max_def_violation <= std::max(tol.eps_rank, 1e-10) * 100.0;
    } catch (const EmptySymmetryFamily&) {
        // invariance holds vacuously; reported via def_samples = 0
        report.def_samples = 0;
        report.def_ok = true;
    }
    return report;
}

PerfectCorrelationTransferReport verify_theorem2(const MeasurementContext& ctx,
                                                 const OperatorMatrix& b_partner,
                                                 const StarAlgebra& b, int max_power,
                                                 int t_grid_points, std::uint64_t seed,
                                                 const ToleranceConfig& tol) {
    const CommutingPair pair{ctx.measured, b_partner};
    const auto diag = is_epr_state(ctx.state, pair, tol);
    if (!diag.epr)
        throw PremiseFailure("verify_theorem2: state is not an EPR state for the pair");

    const auto beable = check_beable_subalgebra(b, ctx, 8, seed, tol);
    if (!beable.beable_ok)
        throw PremiseFailure("verify_theorem2: beable_ok false (classicality fails)");
    if (!beable.a_priv_ok)
        throw PremiseFailure("verify_theorem2: a_priv_ok false (measured not in B)");
    if (!beable.def_ok)
        throw PremiseFailure("verify_theorem2: def_ok false (sampled invariance fails)");

    PerfectCorrelationTransferReport rep;
    const auto& phi = ctx.state;

    std::vector<OperatorMatrix> powers;
    OperatorMatrix p = b_partner;
    for (int n = 1; n <= max_power; ++n) {
        powers.push_back(p);
        p = p * b_partner;
    }
    for (const auto& bn : powers)
        for (const auto& z : b.basis) {
            const OperatorMatrix c = commutator(bn, z);
            rep.max_modulus = std::max(rep.max_modulus, phi(c.adjoint() * c).real());
        }

    const OperatorMatrix d = ctx.measured - b_partner;
    if (phi.inducing_vector) {
        const Vector& psi = *phi.inducing_vector;
        for (int k = 1; k <= t_grid_points; ++k) {
            const double t = 0.2 * k;
            const Vector moved = unitary_exp(d, -t, tol) * psi;
            rep.max_vt_deviation = std::max(rep.max_vt_deviation, (moved - psi).norm());
        }
    }

    for (const auto& z : b.basis)
        rep.max_span_residual =
            std::max(rep.max_span_residual, b.membership_residual(commutator(d, z)));

    rep.pass = rep.max_modulus < tol.eps_feas && rep.max_vt_deviation < tol.eps_feas &&
               rep.max_span_residual < tol.eps_feas;
    return rep;
}

ExclusionReport verify_exclusion(const MeasurementContext& ctx, const CommutingPair& pair1,
                                 const CommutingPair& pair2, const OperatorMatrix& candidate,
                                 int max_power, const ToleranceConfig& tol) {
    const auto& phi = ctx.state;
    if (!is_epr_state(phi, pair1, tol).epr || !is_epr_state(phi, pair2, tol).epr)
        throw PremiseFailure("verify_exclusion: premise EPR condition fails");
    if (!incommensurability_check(phi, pair1, pair2, max_power, tol).incommensurable)
        throw PremiseFailure("verify_exclusion: pairs are not incommensurable");

    const auto direct = commute_in_state(pair1.first, candidate, phi, max_power, tol);
    const auto transfer = commute_in_state(pair1.second, candidate, phi, max_power, tol);

    ExclusionReport rep;
    if (direct.max_modulus >= transfer.max_modulus) {
        rep.violation = direct.max_modulus;
        rep.route = "commutator with the measured observable";
        rep.witness_n = direct.witness_n;
        rep.witness_m = direct.witness_m;
    } else {
        rep.violation = transfer.max_modulus;
        rep.route = "transfer through the perfectly correlated partner";
        rep.witness_n = transfer.witness_n;
        rep.witness_m = transfer.witness_m;
    }
    rep.excluded = rep.violation > tol.eps_zero;
    return rep;
}

AppropriateMixture build_appropriate_mixture(const MeasurementContext& ctx,
                                             const std::vector<OperatorMatrix>& pool,
                                             int max_power, const ToleranceConfig& tol) {
    const Eigen::Index dim = ctx.state.dim();
    AppropriateMixture mix;
    mix.algebra = generate_algebra({ctx.measured}, dim, tol);

    for (std::size_t i = 0; i < pool.size(); ++i) {
        const OperatorMatrix& cand = pool[i];
        if (!is_hermitian(cand, std::max(tol.eps_zero, 1e-12))) {
            mix.log.push_back({i, false, "rejected: not Hermitian"});
            continue;
        }
        if (commutator(ctx.measured, cand).norm() > std::max(tol.eps_zero, 1e-12) * 10.0) {
            mix.log.push_back({i, false, "rejected: does not commute with the measured observable"});
            continue;
        }

        bool eligible = is_epr_state(ctx.state, {ctx.measured, cand}, tol).epr;
        std::string how = "perfectly correlated with the measured observable";
        if (!eligible) {
            eligible = true;
            for (const auto& z : mix.algebra.basis)
                if (!commute_in_state(cand, z, ctx.state, max_power, tol).commute) {
                    eligible = false;
                    break;
                }
            how = "state-commutes with the admitted algebra";
        }
        if (!eligible) {
            mix.log.push_back({i, false,
                               "rejected: neither perfectly correlated nor "
                               "state-commuting with the admitted algebra"});
            continue;
        }

        std::vector<OperatorMatrix> gens = mix.algebra.basis;
        gens.push_back(cand);
        StarAlgebra enlarged = generate_algebra(gens, dim, tol);
        const auto cert = classicality_check(ctx.state, enlarged, tol);
        if (cert.classical) {
            mix.algebra = std::move(enlarged);
            mix.log.push_back({i, true, "admitted: " + how});
        } else {
            mix.log.push_back({i, false, "rejected: classicality fails on the enlarged algebra"});
        }
    }
    return mix;
}

}  // namespace beable
