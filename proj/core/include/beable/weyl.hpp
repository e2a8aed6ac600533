#pragma once

#include <vector>

#include "beable/epr.hpp"
#include "beable/states.hpp"

namespace beable {

/// Clock-and-shift pair on dimension d: Z X = omega X Z with
/// omega = e^{2 pi i / d}, Z^d = X^d = I.
struct WeylSystem {
    int d = 0;
    Complex omega;
    OperatorMatrix clock;  ///< Z = diag(1, omega, ..., omega^{d-1})
    OperatorMatrix shift;  ///< X : |k> -> |k+1 mod d>
};

WeylSystem clock_shift(int d);

/// Maximally entangled state on dimension d^2 with clock/shift offsets
/// (u, v): the clock correlator picks up omega^{ut} and the shift
/// correlator omega^{vs}.
struct FiniteEPRState {
    int d = 0, u = 0, v = 0;
    Vector psi;
    State phi;

    /// max over the full (t, s) grid of the offset-corrected correlator
    /// deviations; vanishes for a valid state.
    [[nodiscard]] double correlator_grid_residual(const WeylSystem& sys) const;
};

FiniteEPRState finite_epr_state(int d, int u, int v);

struct Theorem9Report {
    double measured_modulus = 0.0;        ///< phi(|[Z2^a, X2^b]|^2)
    double contradiction_magnitude = 0.0; ///< |1 - omega^{ab}|
    bool epr_premise_ok = false;          ///< clock observables perfectly correlated
    int a = 1, b = 1;
};

/// Reproduces the exclusion argument for the second-side shift observable:
/// were it admissible, its state-commutator with the second-side clock
/// would vanish, contradicting the Weyl relation by |1 - omega^{ab}|.
Theorem9Report theorem9_exclusion(int d, int u, int v, int a = 1, int b = 1,
                                  const ToleranceConfig& tol = {});

/// The number-like clock observables whose perfect correlation underlies
/// the exclusion argument: side 1 carries N = sum k |k><k|, side 2 its
/// offset-corrected transport.
CommutingPair clock_observable_pair(const FiniteEPRState& st);

/// Residuals phi(|f(A) - f(B)|^2) for sampled functions f on Z_d applied
/// to the clock observable pair; all vanish for u = v = 0.
std::vector<double> finite_ap_transport(const FiniteEPRState& st, int n_samples,
                                        std::uint64_t seed = 7,
                                        const ToleranceConfig& tol = {});

}  // namespace beable
