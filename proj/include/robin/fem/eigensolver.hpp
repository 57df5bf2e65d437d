#pragma once

#include "robin/fem/assemble.hpp"

#include <Eigen/Dense>

namespace robin::fem {

struct EigenPairs {
    Eigen::VectorXd values;   ///< ascending
    Eigen::MatrixXd vectors;  ///< M-orthonormal columns
    int iterations = 0;
    double max_residual = 0.0;  ///< max_i |K x_i - mu_i M x_i| / |x_i|
};

struct EigenOptions {
    double tolerance = 1e-8;
    int max_iterations = 1000;
    int guard_vectors = 8;
    long dense_limit = 400;  ///< dense generalized solver at or below this size
};

/// Smallest `count` eigenpairs of K x = mu M x for symmetric positive definite
/// K and M. Subspace iteration on K^{-1} M with Rayleigh-Ritz; throws
/// ConvergenceError if the residual target is not met within the cap.
EigenPairs solve_eigs(const SparseMatrix& k, const SparseMatrix& m, int count, const EigenOptions& options = {});

}  // namespace robin::fem
