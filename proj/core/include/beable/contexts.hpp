#pragma once

#include <string>
#include <vector>

#include "beable/classicality.hpp"
#include "beable/epr.hpp"

namespace beable {

/// A state together with the observable being measured in it.
struct MeasurementContext {
    State state;
    OperatorMatrix measured;
};

struct BeableReport {
    bool beable_ok = false;   ///< classicality of the state on B
    bool a_priv_ok = false;   ///< measured observable lies in B
    bool def_ok = false;      ///< sampled symmetry invariance (necessary-condition test)
    int def_samples = 0;
    double max_def_violation = 0.0;
    double classicality_residual = 0.0;

    [[nodiscard]] bool all_ok() const { return beable_ok && a_priv_ok && def_ok; }
};

/// Unitaries U = exp(iK) with K Hermitian in the commutant of C*(measured)
/// and K psi = 0, so that U fixes both the observable and the state.
/// Sampling is deterministic in the seed. Throws EmptySymmetryFamily when
/// the constrained space is trivial.
std::vector<OperatorMatrix> sample_context_symmetries(const MeasurementContext& ctx,
                                                      int n, std::uint64_t seed,
                                                      const ToleranceConfig& tol = {});

/// Checks the three beable-subalgebra conditions for B in the context.
/// The invariance condition is tested on a sampled symmetry family only.
BeableReport check_beable_subalgebra(const StarAlgebra& b, const MeasurementContext& ctx,
                                     int n_symmetry_samples = 8, std::uint64_t seed = 1,
                                     const ToleranceConfig& tol = {});

struct PerfectCorrelationTransferReport {
    double max_modulus = 0.0;          ///< max phi(|[B^n, Z]|^2) over basis and powers
    double max_vt_deviation = 0.0;     ///< max_t ||exp(-it(A-B)) psi - psi||
    double max_span_residual = 0.0;    ///< membership residual of [A-B, Z] in B
    bool pass = false;
};

/// Verifies that an observable perfectly correlated with the measured one
/// state-commutes with everything in a beable subalgebra, together with
/// the proof-device identities behind that fact.
PerfectCorrelationTransferReport verify_theorem2(const MeasurementContext& ctx,
                                                 const OperatorMatrix& b_partner,
                                                 const StarAlgebra& b, int max_power = 4,
                                                 int t_grid_points = 32,
                                                 std::uint64_t seed = 1,
                                                 const ToleranceConfig& tol = {});

struct ExclusionReport {
    bool excluded = false;
    double violation = 0.0;  ///< largest commutator modulus found
    std::string route;       ///< which side produced the violation
    int witness_n = 0, witness_m = 0;
};

/// Tests whether a candidate observable is barred from every beable
/// subalgebra of the context: a nonzero state-commutator modulus with
/// either same-side or transferred-side member is a violation.
ExclusionReport verify_exclusion(const MeasurementContext& ctx, const CommutingPair& pair1,
                                 const CommutingPair& pair2, const OperatorMatrix& candidate,
                                 int max_power = 4, const ToleranceConfig& tol = {});

struct AdmissionLogEntry {
    std::size_t pool_index;
    bool admitted;
    std::string reason;
};

struct AppropriateMixture {
    StarAlgebra algebra;
    std::vector<AdmissionLogEntry> log;
};

/// Greedy realization of the appropriate-mixture strategy: starting from
/// C*(measured), adjoin pool observables that are perfectly correlated
/// with the measured one (or state-commute with everything admitted),
/// as long as the enlarged algebra stays classical for the state.
AppropriateMixture build_appropriate_mixture(const MeasurementContext& ctx,
                                             const std::vector<OperatorMatrix>& pool,
                                             int max_power = 4,
                                             const ToleranceConfig& tol = {});

}  // namespace beable
