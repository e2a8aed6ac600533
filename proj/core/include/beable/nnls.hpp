#pragma once

#include <Eigen/Dense>

namespace beable {

struct NnlsResult {
    Eigen::VectorXd x;      ///< nonnegative minimizer
    double residual_norm;   ///< ||A x - b||_2
    bool converged;
};

/// Lawson-Hanson active-set solve of min ||A x - b|| subject to x >= 0.
NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                int max_iter = 0, double tol = 1e-12);

}  // namespace beable
