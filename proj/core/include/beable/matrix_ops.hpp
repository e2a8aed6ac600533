#pragma once

#include <Eigen/Dense>
#include <complex>

namespace beable {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline OperatorMatrix dagger(const OperatorMatrix& x) { return x.adjoint(); }

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a * b - b * a;
}

/// |X|^2 = X* X.
inline OperatorMatrix abs_squared(const OperatorMatrix& x) { return x.adjoint() * x; }

/// Operator (spectral) norm via the largest singular value.
inline double op_norm(const OperatorMatrix& x) {
    if (x.size() == 0) return 0.0;
    return x.jacobiSvd().singularValues()(0);
}

/// Trace inner product <X,Y> = tr(X* Y).
inline Complex trace_inner(const OperatorMatrix& x, const OperatorMatrix& y) {
    return (x.adjoint() * y).trace();
}

inline double trace_norm_hs(const OperatorMatrix& x) {
    return x.norm();  // Frobenius = Hilbert-Schmidt
}

inline OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Vector kron_vec(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

/// Column-major vectorization; matches vec(AXB) = (B^T (x) A) vec(X).
inline Vector vec(const OperatorMatrix& x) {
    return Eigen::Map<const Vector>(x.data(), x.size());
}

inline OperatorMatrix unvec(const Vector& v, Eigen::Index dim) {
    return Eigen::Map<const OperatorMatrix>(v.data(), dim, dim);
}

inline bool is_hermitian(const OperatorMatrix& x, double eps) {
    return (x - x.adjoint()).norm() <= eps * std::max(1.0, x.norm());
}

inline bool is_projection(const OperatorMatrix& x, double eps) {
    return is_hermitian(x, eps) && (x * x - x).norm() <= eps * std::max(1.0, x.norm());
}

inline bool is_unitary(const OperatorMatrix& x, double eps) {
    const OperatorMatrix id = OperatorMatrix::Identity(x.rows(), x.cols());
    return (x.adjoint() * x - id).norm() <= eps * x.rows() &&
           (x * x.adjoint() - id).norm() <= eps * x.rows();
}

inline bool is_partial_isometry(const OperatorMatrix& x, double eps) {
    return (x * x.adjoint() * x - x).norm() <= eps * std::max(1.0, x.norm());
}

inline OperatorMatrix identity(Eigen::Index dim) {
    return OperatorMatrix::Identity(dim, dim);
}

}  // namespace beable
