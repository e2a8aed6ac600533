#include "beable/epr.hpp"

#include <cmath>

#include "beable/decompositions.hpp"
#include "beable/errors.hpp"

namespace beable {

namespace {

void require_commuting(const CommutingPair& pair, const ToleranceConfig& tol) {
    const double scale =
        std::max(1.0, op_norm(pair.first) * op_norm(pair.second));
    if (pair.commutator_norm() > std::max(tol.eps_zero, 1e-12) * scale)
        throw NonCommutingPair("pair does not commute as operators");
}

}  // namespace

double JointDistribution::diagonal_mass(double value_eps) const {
    double mass = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (std::abs(support[i].first - support[i].second) <= value_eps)
            mass += probabilities[i];
    return mass;
}

namespace {

std::vector<std::pair<double, double>> accumulate_marginal(
    const std::vector<std::pair<double, double>>& support,
    const std::vector<double>& probs, bool first) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < support.size(); ++i) {
        const double v = first ? support[i].first : support[i].second;
        bool found = false;
        for (auto& [val, p] : out)
            if (std::abs(val - v) <= 1e-9) {
                p += probs[i];
                found = true;
                break;
            }
        if (!found) out.emplace_back(v, probs[i]);
    }
    return out;
}

}  // namespace

std::vector<std::pair<double, double>> JointDistribution::marginal_first() const {
    return accumulate_marginal(support, probabilities, true);
}

std::vector<std::pair<double, double>> JointDistribution::marginal_second() const {
    return accumulate_marginal(support, probabilities, false);
}

JointDistribution joint_distribution(const CommutingPair& pair, const State& phi,
                                     const ToleranceConfig& tol) {
    require_commuting(pair, tol);
    const auto spec_a = spectral_decomposition(pair.first, tol);
    const auto spec_b = spectral_decomposition(pair.second, tol);

    JointDistribution dist;
    double total = 0.0;
    double moment = 0.0;
    for (const auto& [a, p] : spec_a)
        for (const auto& [b, q] : spec_b) {
            const double prob = phi(p * q).real();
            if (prob < -100.0 * std::max(tol.eps_zero, 1e-13))
                throw NonCommutingPair(
                    "joint_distribution: negative probability beyond tolerance");
            const double clipped = std::max(prob, 0.0);
            dist.support.emplace_back(a, b);
            dist.probabilities.push_back(clipped);
            total += clipped;
            moment += a * b * clipped;
        }
    if (total > 0.0)
        for (double& p : dist.probabilities) p /= total;
    dist.moment_check_residual =
        std::abs(moment / (total > 0.0 ? total : 1.0) -
                 phi(pair.first * pair.second).real());
    return dist;
}

EprDiagnostics is_epr_state(const State& phi, const CommutingPair& pair,
                            const ToleranceConfig& tol, int t_grid_points) {
    require_commuting(pair, tol);
    EprDiagnostics diag;
    const OperatorMatrix d = pair.first - pair.second;
    diag.moment = phi(d * d).real();
    diag.epr = diag.moment < tol.eps_zero;
    diag.diagonal_mass = joint_distribution(pair, phi, tol).diagonal_mass();

    for (int k = 1; k <= t_grid_points; ++k) {
        const double t = 0.2 * k;
        const Complex corr =
            phi(unitary_exp(pair.first, t, tol) * unitary_exp(pair.second, -t, tol));
        diag.max_grid_deviation = std::max(diag.max_grid_deviation, std::abs(corr - 1.0));
    }
    return diag;
}

StateCommutationResult commute_in_state(const OperatorMatrix& a, const OperatorMatrix& b,
                                        const State& phi, int max_power,
                                        const ToleranceConfig& tol) {
    auto powers = [&](const OperatorMatrix& x, bool& cycles) {
        std::vector<OperatorMatrix> ps;
        OperatorMatrix p = x;
        cycles = false;
        for (int n = 1; n <= max_power; ++n) {
            for (const auto& prev : ps)
                if ((prev - p).norm() <= 1e-10 * std::max(1.0, p.norm())) {
                    cycles = true;
                    return ps;
                }
            ps.push_back(p);
            p = p * x;
        }
        // one step beyond the bound: did the sequence close?
        for (const auto& prev : ps)
            if ((prev - p).norm() <= 1e-10 * std::max(1.0, p.norm())) cycles = true;
        return ps;
    };

    bool cyc_a = false, cyc_b = false;
    const auto pa = powers(a, cyc_a);
    const auto pb = powers(b, cyc_b);

    StateCommutationResult res;
    res.scan_exhaustive = cyc_a && cyc_b;
    for (std::size_t n = 0; n < pa.size(); ++n)
        for (std::size_t m = 0; m < pb.size(); ++m) {
            const OperatorMatrix c = commutator(pa[n], pb[m]);
            const double mod = phi(c.adjoint() * c).real();
            if (mod > res.max_modulus) {
                res.max_modulus = mod;
                res.witness_n = static_cast<int>(n) + 1;
                res.witness_m = static_cast<int>(m) + 1;
            }
        }
    res.commute = res.max_modulus < tol.eps_zero;
    return res;
}

IncommensurabilityResult incommensurability_check(const State& phi,
                                                  const CommutingPair& pair1,
                                                  const CommutingPair& pair2,
                                                  int max_power,
                                                  const ToleranceConfig& tol) {
    IncommensurabilityResult res;
    res.side1 = commute_in_state(pair1.first, pair2.first, phi, max_power, tol);
    res.side2 = commute_in_state(pair1.second, pair2.second, phi, max_power, tol);
    res.incommensurable = !res.side1.commute && !res.side2.commute;
    return res;
}

Complex TrigPolynomial::operator()(double x) const {
    Complex s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s += coeffs[k] * std::exp(Complex(0.0, freqs[k] * x));
    return s;
}

OperatorMatrix TrigPolynomial::apply(const OperatorMatrix& h,
                                     const ToleranceConfig& tol) const {
    return apply_spectral(h, [this](double x) { return (*this)(x); }, tol);
}

std::vector<double> epr_function_transport(const State& phi, const CommutingPair& pair,
                                           const std::vector<TrigPolynomial>& fs,
                                           const ToleranceConfig& tol) {
    require_commuting(pair, tol);
    std::vector<double> residuals;
    residuals.reserve(fs.size());
    for (const auto& f : fs) {
        const OperatorMatrix d = f.apply(pair.first, tol) - f.apply(pair.second, tol);
        residuals.push_back(phi(d.adjoint() * d).real());
    }
    return residuals;
}

SingletScenario singlet_scenario() {
    Vector e0(2), e1(2);
    e0 << 1.0, 0.0;
    e1 << 0.0, 1.0;
    Vector psi = (kron_vec(e0, e1) - kron_vec(e1, e0)) / std::sqrt(2.0);

    OperatorMatrix p_up(2, 2), p_down(2, 2), p_plus(2, 2), p_minus(2, 2);
    p_up << 1, 0, 0, 0;
    p_down << 0, 0, 0, 1;
    p_plus << 0.5, 0.5, 0.5, 0.5;
    p_minus << 0.5, -0.5, -0.5, 0.5;

    const OperatorMatrix id2 = identity(2);
    SingletScenario sc;
    sc.psi = psi;
    sc.phi = vector_state(psi);
    sc.pair1 = {kron(p_up, id2), kron(id2, p_down)};
    sc.pair2 = {kron(p_plus, id2), kron(id2, p_minus)};
    return sc;
}

}  // namespace beable
