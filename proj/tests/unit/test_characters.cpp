#include <doctest.h>

#include "beable/characters.hpp"
#include "helpers.hpp"

using namespace beable;
using namespace beable::testing;

namespace {

StarAlgebra diagonal_algebra(Eigen::Index n) {
    std::vector<OperatorMatrix> gens;
    for (Eigen::Index k = 0; k < n; ++k) {
        OperatorMatrix p = OperatorMatrix::Zero(n, n);
        p(k, k) = 1.0;
        gens.push_back(p);
    }
    return generate_algebra(gens, n, {});
}

}  // namespace

TEST_CASE("dispersion_free_check: point evaluation on diagonal M3") {
    const StarAlgebra b = diagonal_algebra(3);
    // omega(X) = X_00, expressed through basis coefficients
    OperatorMatrix e00 = OperatorMatrix::Zero(3, 3);
    e00(0, 0) = 1.0;
    std::vector<Complex> values;
    values.reserve(b.dim());
    for (const auto& g : b.basis) values.push_back(g(0, 0));
    CHECK(dispersion_free_check(values, b, {}));
    (void)e00;
}

TEST_CASE("dispersion_free_check: normalized trace on full M2 fails") {
    const StarAlgebra b = generate_algebra({pauli_x(), pauli_z()}, 2, {});
    std::vector<Complex> values;
    for (const auto& g : b.basis) values.push_back(g.trace() / 2.0);
    CHECK_FALSE(dispersion_free_check(values, b, {}));
}

TEST_CASE("dispersion_free_check: equal mixture of two characters fails") {
    const StarAlgebra b = diagonal_algebra(2);
    std::vector<Complex> values;
    for (const auto& g : b.basis) values.push_back((g(0, 0) + g(1, 1)) / 2.0);
    CHECK_FALSE(dispersion_free_check(values, b, {}));
}

TEST_CASE("characters: diagonal M3 has exactly three") {
    const StarAlgebra b = diagonal_algebra(3);
    const auto chars = characters(b, {});
    CHECK(chars.size() == 3);
    for (const auto& c : chars) CHECK(dispersion_free_check(c.values, b, {}));
}

TEST_CASE("characters: full M2 has none") {
    const StarAlgebra b = generate_algebra({pauli_x(), pauli_z()}, 2, {});
    CHECK(characters(b, {}).empty());
}

TEST_CASE("characters: two-projection abelian algebra in M4 has two") {
    const StarAlgebra b =
        generate_algebra({kron(proj0(), identity(2))}, 4, {});
    const auto chars = characters(b, {});
    CHECK(chars.size() == 2);
    for (const auto& c : chars) CHECK(dispersion_free_check(c.values, b, {}));
    // the characters take values {1,0} and {0,1} on the projection
    const Vector coeffs = b.coefficients(kron(proj0(), identity(2)));
    std::vector<double> vals;
    for (const auto& c : chars) vals.push_back(c(coeffs).real());
    std::sort(vals.begin(), vals.end());
    CHECK(vals[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(vals[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("characters: mixed block structure M1 + M2 inside M3") {
    OperatorMatrix p = OperatorMatrix::Zero(3, 3);
    p(0, 0) = 1.0;
    OperatorMatrix x23 = OperatorMatrix::Zero(3, 3);
    x23(1, 2) = x23(2, 1) = 1.0;
    OperatorMatrix z23 = OperatorMatrix::Zero(3, 3);
    z23(1, 1) = 1.0;
    z23(2, 2) = -1.0;
    const StarAlgebra b = generate_algebra({p, x23, z23}, 3, {});
    CHECK(b.dim() == 5);  // C + M2
    const auto chars = characters(b, {});
    REQUIRE(chars.size() == 1);  // only the 1x1 block contributes
    CHECK(chars[0](b.coefficients(p)).real() == doctest::Approx(1.0).epsilon(1e-10));
}
