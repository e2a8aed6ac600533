#include <doctest.h>

#include "beable/algebra.hpp"
#include "beable/errors.hpp"
#include "helpers.hpp"

using namespace beable;
using namespace beable::testing;

TEST_CASE("generate_algebra: unital closure of nothing is the scalars") {
    const StarAlgebra a = generate_algebra({}, 3, {});
    CHECK(a.dim() == 1);
    CHECK(a.contains(identity(3), 1e-10));
}

TEST_CASE("generate_algebra: single idempotent generator") {
    const StarAlgebra a = generate_algebra({proj0()}, 2, {});
    CHECK(a.dim() == 2);
    CHECK(a.contains(identity(2), 1e-10));
    CHECK(a.contains(proj0(), 1e-10));
    CHECK(a.is_abelian(1e-10));
}

TEST_CASE("generate_algebra: Pauli X and Z generate full M2") {
    const StarAlgebra a = generate_algebra({pauli_x(), pauli_z()}, 2, {});
    CHECK(a.dim() == 4);
    CHECK_FALSE(a.is_abelian(1e-10));
}

TEST_CASE("commutant: full M2 has scalar commutant") {
    const StarAlgebra a = generate_algebra({pauli_x(), pauli_z()}, 2, {});
    const StarAlgebra c = commutant(a, {});
    CHECK(c.dim() == 1);
    CHECK(c.contains(identity(2), 1e-10));
}

TEST_CASE("commutant: scalars have full commutant") {
    const StarAlgebra scalars = generate_algebra({}, 4, {});
    CHECK(commutant(scalars, {}).dim() == 16);
}

TEST_CASE("commutant: M2 x I inside M4 is I x M2") {
    const StarAlgebra left = generate_algebra(
        {kron(pauli_x(), identity(2)), kron(pauli_z(), identity(2))}, 4, {});
    const StarAlgebra c = commutant(left, {});
    CHECK(c.dim() == 4);
    CHECK(c.contains(kron(identity(2), pauli_x()), 1e-10));
    CHECK(c.contains(kron(identity(2), pauli_z()), 1e-10));
    CHECK(c.contains(kron(identity(2), pauli_y()), 1e-10));
    CHECK_FALSE(c.contains(kron(pauli_x(), identity(2)), 1e-8));
}

TEST_CASE("double commutant recovers the generated algebra") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const StarAlgebra b =
            generate_algebra({random_hermitian(4, rng)}, 4, {});
        const StarAlgebra bcc = commutant(commutant(b, {}), {});
        CHECK(subspace_distance(b, bcc) < 1e-9);
    }
}

TEST_CASE("closure is idempotent on an algebra basis") {
    std::mt19937_64 rng(5);
    const StarAlgebra b = generate_algebra({random_hermitian(3, rng)}, 3, {});
    const StarAlgebra again = generate_algebra(b.basis, 3, {});
    CHECK(subspace_distance(b, again) < 1e-10);
    CHECK(b.dim() == again.dim());
}

TEST_CASE("center of full M2 is the scalars") {
    const StarAlgebra a = generate_algebra({pauli_x(), pauli_z()}, 2, {});
    const StarAlgebra z = center(a, {});
    CHECK(z.dim() == 1);
    CHECK(z.contains(identity(2), 1e-10));
}

TEST_CASE("conjugate moves the span; membership residual detects it") {
    std::mt19937_64 rng(3);
    const StarAlgebra b = generate_algebra({proj0()}, 2, {});
    const OperatorMatrix u = random_unitary(2, rng);
    const StarAlgebra moved = conjugate(b, u, {});
    CHECK(moved.dim() == b.dim());
    CHECK(moved.contains(u.adjoint() * proj0() * u, 1e-10));
}
