#include "beable/weyl.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "beable/decompositions.hpp"
#include "beable/errors.hpp"

namespace beable {

WeylSystem clock_shift(int d) {
    if (d < 2) throw InvalidInput("clock_shift: d must be at least 2");
    WeylSystem sys;
    sys.d = d;
    sys.omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
    sys.clock = OperatorMatrix::Zero(d, d);
    sys.shift = OperatorMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        sys.clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
        sys.shift((k + 1) % d, k) = 1.0;
    }
    return sys;
}

namespace {

OperatorMatrix matrix_power_mod(const OperatorMatrix& x, int e, int d) {
    int r = ((e % d) + d) % d;
    OperatorMatrix out = identity(x.rows());
    for (int i = 0; i < r; ++i) out = out * x;
    return out;
}

}  // namespace

FiniteEPRState finite_epr_state(int d, int u, int v) {
    const WeylSystem sys = clock_shift(d);
    u = ((u % d) + d) % d;
    v = ((v % d) + d) % d;

    Vector max_ent = Vector::Zero(Eigen::Index(d) * d);
    for (int k = 0; k < d; ++k) max_ent(Eigen::Index(k) * d + k) = 1.0 / std::sqrt(double(d));

    // second side carries X^{-u} Z^{-v}; this sign convention makes the
    // clock correlator equal omega^{ut} and the shift correlator omega^{vs}
    const OperatorMatrix c =
        matrix_power_mod(sys.shift, -u, d) * matrix_power_mod(sys.clock, -v, d);

    FiniteEPRState st;
    st.d = d;
    st.u = u;
    st.v = v;
    st.psi = kron(identity(d), c) * max_ent;
    st.phi = vector_state(st.psi);
    return st;
}

double FiniteEPRState::correlator_grid_residual(const WeylSystem& sys) const {
    const OperatorMatrix id = identity(d);
    double worst = 0.0;
    for (int t = 0; t < d; ++t) {
        const Complex corr = phi(kron(matrix_power_mod(sys.clock, t, d),
                                      matrix_power_mod(sys.clock, -t, d)));
        worst = std::max(worst, std::abs(corr - std::pow(sys.omega, u * t)));
    }
    for (int s = 0; s < d; ++s) {
        const Complex corr = phi(kron(matrix_power_mod(sys.shift, s, d),
                                      matrix_power_mod(sys.shift, s, d)));
        worst = std::max(worst, std::abs(corr - std::pow(sys.omega, v * s)));
    }
    (void)id;
    return worst;
}

CommutingPair clock_observable_pair(const FiniteEPRState& st) {
    const WeylSystem sys = clock_shift(st.d);
    OperatorMatrix number = OperatorMatrix::Zero(st.d, st.d);
    for (int k = 0; k < st.d; ++k) number(k, k) = double(k);
    const OperatorMatrix c = matrix_power_mod(sys.shift, -st.u, st.d) *
                             matrix_power_mod(sys.clock, -st.v, st.d);
    return {kron(number, identity(st.d)),
            kron(identity(st.d), c * number * c.adjoint())};
}

Theorem9Report theorem9_exclusion(int d, int u, int v, int a, int b,
                                  const ToleranceConfig& tol) {
    if (((a * b) % d + d) % d == 0)
        throw DegenerateChoice("theorem9_exclusion: a*b = 0 (mod d) makes the argument vacuous");

    const WeylSystem sys = clock_shift(d);
    const FiniteEPRState st = finite_epr_state(d, u, v);

    Theorem9Report rep;
    rep.a = a;
    rep.b = b;
    rep.contradiction_magnitude = std::abs(1.0 - std::pow(sys.omega, a * b));

    const OperatorMatrix z2 = kron(identity(d), matrix_power_mod(sys.clock, a, d));
    const OperatorMatrix x2 = kron(identity(d), matrix_power_mod(sys.shift, b, d));
    const OperatorMatrix c = commutator(z2, x2);
    rep.measured_modulus = st.phi(c.adjoint() * c).real();

    rep.epr_premise_ok = is_epr_state(st.phi, clock_observable_pair(st), tol).epr;
    return rep;
}

std::vector<double> finite_ap_transport(const FiniteEPRState& st, int n_samples,
                                        std::uint64_t seed, const ToleranceConfig& tol) {
    const CommutingPair pair = clock_observable_pair(st);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<std::vector<Complex>> fns;
    fns.push_back(std::vector<Complex>(static_cast<std::size_t>(st.d), Complex(1.0, 0.0)));
    std::vector<Complex> indicator(static_cast<std::size_t>(st.d), Complex(0.0, 0.0));
    indicator[0] = 1.0;
    fns.push_back(indicator);
    for (int s = 0; s < n_samples; ++s) {
        std::vector<Complex> f(static_cast<std::size_t>(st.d));
        for (auto& x : f) x = Complex(gauss(rng), gauss(rng));
        fns.push_back(std::move(f));
    }

    std::vector<double> residuals;
    residuals.reserve(fns.size());
    for (const auto& f : fns) {
        auto table = [&](double lam) {
            const int k = static_cast<int>(std::lround(lam)) % st.d;
            return f[static_cast<std::size_t>((k + st.d) % st.d)];
        };
        const OperatorMatrix d =
            apply_spectral(pair.first, table, tol) - apply_spectral(pair.second, table, tol);
        residuals.push_back(st.phi(d.adjoint() * d).real());
    }
    return residuals;
}

}  // namespace beable
