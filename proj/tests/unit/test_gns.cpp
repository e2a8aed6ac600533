#include <doctest.h>

#include "beable/epr.hpp"
#include "beable/gns.hpp"
#include "helpers.hpp"

using namespace beable;
using namespace beable::testing;

TEST_CASE("gns: vector state on full M_n has GNS dimension n") {
    std::mt19937_64 rng(47);
    for (Eigen::Index n : {2, 3}) {
        std::vector<OperatorMatrix> gens = {random_hermitian(n, rng),
                                            random_hermitian(n, rng)};
        const StarAlgebra a = generate_algebra(gens, n, {});
        REQUIRE(a.dim() == static_cast<std::size_t>(n * n));
        const State phi = vector_state(random_unit_vector(n, rng));
        const auto rep = gns_construct(a, phi, {});
        CHECK(rep.dim == n);
    }
}

TEST_CASE("gns: normalized trace on M2 has GNS dimension 4") {
    const StarAlgebra a = generate_algebra({pauli_x(), pauli_z()}, 2, {});
    const auto rep = gns_construct(a, density_state(identity(2) / 2.0), {});
    CHECK(rep.dim == 4);
}

TEST_CASE("gns contract: cyclic vector reproduces the state") {
    std::mt19937_64 rng(53);
    const StarAlgebra a = generate_algebra({random_hermitian(3, rng)}, 3, {});
    const State phi = vector_state(random_unit_vector(3, rng));
    const auto rep = gns_construct(a, phi, {});

    CHECK((rep.represent(a, identity(3)) - identity(rep.dim)).norm() < 1e-9);
    for (const auto& g : a.basis) {
        const OperatorMatrix pg = rep.represent(a, g);
        const Complex lhs = rep.omega.dot(pg * rep.omega);
        CHECK(std::abs(lhs - phi(g)) < 1e-9);
        const double norm2 = (pg * rep.omega).squaredNorm();
        CHECK(norm2 == doctest::Approx(phi.expect_real(g.adjoint() * g)).epsilon(1e-8));
    }
}

TEST_CASE("gns is a homomorphism on products") {
    std::mt19937_64 rng(59);
    const StarAlgebra a = generate_algebra({random_hermitian(3, rng)}, 3, {});
    const State phi = vector_state(random_unit_vector(3, rng));
    const auto rep = gns_construct(a, phi, {});
    for (const auto& g : a.basis)
        for (const auto& h : a.basis) {
            const OperatorMatrix lhs = rep.represent(a, g * h);
            const OperatorMatrix rhs = rep.represent(a, g) * rep.represent(a, h);
            CHECK((lhs - rhs).norm() < 1e-8);
        }
}

TEST_CASE("gns transport: pi(A - B) annihilates Omega for an EPR pair") {
    const SingletScenario sc = singlet_scenario();
    const StarAlgebra a =
        generate_algebra({sc.pair1.first, sc.pair1.second}, 4, {});
    const auto rep = gns_construct(a, sc.phi, {});
    const OperatorMatrix diff =
        rep.represent(a, sc.pair1.first - sc.pair1.second);
    CHECK((diff * rep.omega).norm() < 1e-9);
}
