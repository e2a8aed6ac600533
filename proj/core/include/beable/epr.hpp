#pragma once

#include <optional>
#include <vector>

#include "beable/algebra.hpp"
#include "beable/states.hpp"

namespace beable {

/// A pair of commuting Hermitian operators.
struct CommutingPair {
    OperatorMatrix first;
    OperatorMatrix second;

    [[nodiscard]] double commutator_norm() const {
        return op_norm(commutator(first, second));
    }
};

/// Joint probability distribution of a commuting pair in a state, carried
/// by the spectral values of the two operators.
struct JointDistribution {
    std::vector<std::pair<double, double>> support;
    std::vector<double> probabilities;

    /// Total mass on points with a = b (matched within value tolerance).
    [[nodiscard]] double diagonal_mass(double value_eps = 1e-8) const;

    /// Marginals as (value, probability) lists.
    [[nodiscard]] std::vector<std::pair<double, double>> marginal_first() const;
    [[nodiscard]] std::vector<std::pair<double, double>> marginal_second() const;

    double moment_check_residual = 0.0;  ///< |sum ab mu(a,b) - phi(AB)|
};

/// mu(a_i, b_j) = phi(P_i Q_j) over the spectral projections of the pair.
JointDistribution joint_distribution(const CommutingPair& pair, const State& phi,
                                     const ToleranceConfig& tol = {});

struct EprDiagnostics {
    bool epr = false;
    double moment = 0.0;              ///< phi((A - B)^2)
    double diagonal_mass = 0.0;       ///< of the joint distribution
    double max_grid_deviation = 0.0;  ///< max_t |phi(e^{itA} e^{-itB}) - 1|
};

/// phi is an EPR state for the pair iff phi((A-B)^2) vanishes. Diagnostics
/// carry the two equivalent characterizations (diagonal concentration of
/// the joint distribution, unit correlator on a t-grid).
EprDiagnostics is_epr_state(const State& phi, const CommutingPair& pair,
                            const ToleranceConfig& tol = {}, int t_grid_points = 16);

struct StateCommutationResult {
    bool commute = false;
    double max_modulus = 0.0;  ///< max over scanned exponents
    int witness_n = 0, witness_m = 0;
    bool scan_exhaustive = false;  ///< true when powers cycle within the bound
};

/// Whether A and B commute in phi: phi(|[A^n, B^m]|^2) = 0 for all scanned
/// exponents 1 <= n, m <= max_power. Exhaustive when both power sequences
/// cycle within the bound; otherwise a necessary-condition scan.
StateCommutationResult commute_in_state(const OperatorMatrix& a, const OperatorMatrix& b,
                                        const State& phi, int max_power = 4,
                                        const ToleranceConfig& tol = {});

struct IncommensurabilityResult {
    bool incommensurable = false;
    StateCommutationResult side1, side2;  ///< witnesses live in the moduli
};

/// Incommensurable pairs: (A1,B1) and (A2,B2) each fail to commute in phi.
IncommensurabilityResult incommensurability_check(const State& phi,
                                                  const CommutingPair& pair1,
                                                  const CommutingPair& pair2,
                                                  int max_power = 4,
                                                  const ToleranceConfig& tol = {});

/// f(x) = sum_k alpha_k e^{i t_k x}.
struct TrigPolynomial {
    std::vector<Complex> coeffs;
    std::vector<double> freqs;

    [[nodiscard]] Complex operator()(double x) const;
    [[nodiscard]] OperatorMatrix apply(const OperatorMatrix& h,
                                       const ToleranceConfig& tol = {}) const;
};

/// Residuals phi(|f(A) - f(B)|^2) for each sampled trigonometric
/// polynomial; all vanish when phi is an EPR state for the pair.
std::vector<double> epr_function_transport(const State& phi, const CommutingPair& pair,
                                           const std::vector<TrigPolynomial>& fs,
                                           const ToleranceConfig& tol = {});

struct SingletScenario {
    State phi;
    CommutingPair pair1, pair2;
    Vector psi;
};

/// The two-spin singlet state with its two standard projection pairs.
SingletScenario singlet_scenario();

}  // namespace beable
