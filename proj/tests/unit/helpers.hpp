#pragma once

#include <random>

#include "beable/matrix_ops.hpp"
#include "beable/states.hpp"

namespace beable::testing {

inline OperatorMatrix pauli_x() {
    OperatorMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline OperatorMatrix pauli_y() {
    OperatorMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline OperatorMatrix pauli_z() {
    OperatorMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline OperatorMatrix proj0() {
    OperatorMatrix m(2, 2);
    m << 1, 0, 0, 0;
    return m;
}

inline OperatorMatrix proj_plus() {
    OperatorMatrix m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    return m;
}

inline Vector singlet_vector() {
    Vector psi(4);
    psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
    return psi;
}

inline OperatorMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    OperatorMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
    return (m + m.adjoint()) / 2.0;
}

inline OperatorMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    OperatorMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
    return Eigen::HouseholderQR<OperatorMatrix>(m).householderQ();
}

inline Vector random_unit_vector(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
    return v / v.norm();
}

}  // namespace beable::testing
