#include <doctest.h>

#include "beable/decompositions.hpp"
#include "beable/epr.hpp"
#include "beable/errors.hpp"
#include "helpers.hpp"

using namespace beable;
using namespace beable::testing;

namespace {

State product_00() {
    Vector e0(2);
    e0 << 1, 0;
    return vector_state(kron_vec(e0, e0));
}

}  // namespace

TEST_CASE("joint_distribution: identical projections concentrate on (1,1),(0,0)") {
    std::mt19937_64 rng(61);
    const OperatorMatrix p = kron(proj0(), identity(2));
    const State phi = vector_state(random_unit_vector(4, rng));
    const auto mu = joint_distribution({p, p}, phi, {});
    const double pp = phi.expect_real(p);
    double m11 = 0.0, m00 = 0.0, rest = 0.0;
    for (std::size_t i = 0; i < mu.support.size(); ++i) {
        const auto& [a, b] = mu.support[i];
        if (a > 0.5 && b > 0.5)
            m11 += mu.probabilities[i];
        else if (a < 0.5 && b < 0.5)
            m00 += mu.probabilities[i];
        else
            rest += mu.probabilities[i];
    }
    CHECK(m11 == doctest::Approx(pp).epsilon(1e-10));
    CHECK(m00 == doctest::Approx(1.0 - pp).epsilon(1e-10));
    CHECK(rest == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("joint_distribution: singlet pair concentrates on the diagonal") {
    const SingletScenario sc = singlet_scenario();
    const auto mu = joint_distribution(sc.pair1, sc.phi, {});
    CHECK(mu.diagonal_mass() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(mu.moment_check_residual < 1e-10);

    // marginal consistency against the spectral distributions
    for (const auto& [val, prob] : mu.marginal_first()) {
        double expected = 0.0;
        for (const auto& [lam, p] : spectral_decomposition(sc.pair1.first, {}))
            if (std::abs(lam - val) < 1e-8) expected += sc.phi.expect_real(p);
        CHECK(prob == doctest::Approx(expected).epsilon(1e-8));
    }
    for (const auto& [val, prob] : mu.marginal_second()) {
        double expected = 0.0;
        for (const auto& [lam, p] : spectral_decomposition(sc.pair1.second, {}))
            if (std::abs(lam - val) < 1e-8) expected += sc.phi.expect_real(p);
        CHECK(prob == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("joint_distribution: product state puts all mass on (1,0)") {
    const SingletScenario sc = singlet_scenario();
    const auto mu = joint_distribution(sc.pair1, product_00(), {});
    for (std::size_t i = 0; i < mu.support.size(); ++i) {
        const auto& [a, b] = mu.support[i];
        const double expected = (a > 0.5 && b < 0.5) ? 1.0 : 0.0;
        CHECK(mu.probabilities[i] == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("joint_distribution rejects non-commuting pairs") {
    const State phi = density_state(identity(2) / 2.0);
    CHECK_THROWS_AS(joint_distribution({proj0(), proj_plus()}, phi, {}),
                    NonCommutingPair);
}

TEST_CASE("is_epr_state: singlet with both displayed pairs") {
    const SingletScenario sc = singlet_scenario();
    for (const auto* pair : {&sc.pair1, &sc.pair2}) {
        const auto d = is_epr_state(sc.phi, *pair, {});
        CHECK(d.epr);
        CHECK(d.moment < 1e-10);
        CHECK(d.diagonal_mass == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(d.max_grid_deviation < 1e-10);
    }
}

TEST_CASE("is_epr_state: trivial pair (A, A)") {
    std::mt19937_64 rng(67);
    const OperatorMatrix a = random_hermitian(3, rng);
    const State phi = vector_state(random_unit_vector(3, rng));
    CHECK(is_epr_state(phi, {a, a}, {}).epr);
}

TEST_CASE("is_epr_state: product state fails with moment 1") {
    const SingletScenario sc = singlet_scenario();
    const auto d = is_epr_state(product_00(), sc.pair1, {});
    CHECK_FALSE(d.epr);
    CHECK(d.moment == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("commute_in_state: operator commutation implies state commutation") {
    std::mt19937_64 rng(71);
    const OperatorMatrix a = kron(random_hermitian(2, rng), identity(2));
    const OperatorMatrix b = kron(identity(2), random_hermitian(2, rng));
    const State phi = vector_state(random_unit_vector(4, rng));
    const auto res = commute_in_state(a, b, phi, 4, {});
    CHECK(res.commute);
    CHECK(res.max_modulus < 1e-12);
}

TEST_CASE("commute_in_state: singlet E1 vs F1 has modulus 1/4") {
    const SingletScenario sc = singlet_scenario();
    const auto res =
        commute_in_state(sc.pair1.first, sc.pair2.first, sc.phi, 4, {});
    CHECK_FALSE(res.commute);
    CHECK(res.max_modulus == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(res.witness_n == 1);
    CHECK(res.witness_m == 1);
    CHECK(res.scan_exhaustive);  // projection powers cycle immediately
}

TEST_CASE("commute_in_state: eigenstate of A commutes in state with anything local") {
    // psi = |00>, A = diag(1,0) x I, B = I x Pauli X
    const OperatorMatrix a = kron(proj0(), identity(2));
    const OperatorMatrix b = kron(identity(2), pauli_x());
    const auto res = commute_in_state(a, b, product_00(), 4, {});
    CHECK(res.commute);
}

TEST_CASE("incommensurability: the two singlet pairs, moduli 1/4 at (1,1)") {
    const SingletScenario sc = singlet_scenario();
    const auto r = incommensurability_check(sc.phi, sc.pair1, sc.pair2, 4, {});
    CHECK(r.incommensurable);
    CHECK(r.side1.max_modulus == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(r.side2.max_modulus == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(r.side1.witness_n == 1);
    CHECK(r.side1.witness_m == 1);
    CHECK(r.side2.witness_n == 1);
    CHECK(r.side2.witness_m == 1);
}

TEST_CASE("incommensurability: a pair against itself fails") {
    const SingletScenario sc = singlet_scenario();
    CHECK_FALSE(
        incommensurability_check(sc.phi, sc.pair1, sc.pair1, 4, {}).incommensurable);
}

TEST_CASE("EPR characterization equivalence on random instances") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        // common eigenbasis, partially agreeing spectra
        const OperatorMatrix q = random_unitary(4, rng);
        Eigen::VectorXd av(4), bv(4);
        for (int i = 0; i < 4; ++i) {
            av(i) = i;
            bv(i) = (i < 2) ? double(i) : double(i) + 1.0 + coin(rng);
        }
        const OperatorMatrix a = q * av.cast<Complex>().asDiagonal() * q.adjoint();
        const OperatorMatrix b = q * bv.cast<Complex>().asDiagonal() * q.adjoint();

        Vector psi = Vector::Zero(4);
        if (coin(rng)) {
            // supported on the agreement subspace -> EPR
            Vector c = random_unit_vector(2, rng);
            psi = c(0) * q.col(0) + c(1) * q.col(1);
        } else {
            // sizable disagreement mass -> not EPR, far from borderline
            psi = 0.8 * q.col(0) + 0.6 * q.col(3);
        }
        const State phi = vector_state(psi);
        const auto d = is_epr_state(phi, {a, b}, {});
        const bool by_moment = d.moment < 1e-10;
        const bool by_mass = std::abs(d.diagonal_mass - 1.0) < 1e-8;
        const bool by_grid = d.max_grid_deviation < 1e-8;
        CHECK(by_moment == by_mass);
        CHECK(by_mass == by_grid);
        CHECK(d.epr == by_moment);
    }
}

TEST_CASE("function transport: constant and e^{ix} vanish on the singlet pair") {
    const SingletScenario sc = singlet_scenario();
    std::vector<TrigPolynomial> fs;
    fs.push_back({{Complex(1.0, 0.0)}, {0.0}});
    fs.push_back({{Complex(1.0, 0.0)}, {1.0}});
    const auto res = epr_function_transport(sc.phi, sc.pair1, fs, {});
    for (double r : res) CHECK(r < 1e-12);
}

TEST_CASE("trig polynomial apply matches pointwise evaluation on the spectrum") {
    const TrigPolynomial f{{Complex(0.5, 0.0), Complex(0.5, 0.0)}, {1.0, -1.0}};  // cos
    const OperatorMatrix h = pauli_z();
    const OperatorMatrix fh = f.apply(h, {});
    // cos(diag(1,-1)) = cos(1) I
    CHECK((fh - std::cos(1.0) * identity(2)).norm() < 1e-12);
}
