#include "robin/fem/eigensolver.hpp"

#include "robin/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <random>
#include <sstream>

namespace robin::fem {

namespace {

void fix_signs(Eigen::MatrixXd& x) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        if (x.col(j).sum() < 0.0) x.col(j) *= -1.0;
    }
}

double residual_of(const SparseMatrix& k, const SparseMatrix& m, const Eigen::VectorXd& x, double mu) {
    return (k * x - mu * (m * x)).norm() / x.norm();
}

EigenPairs dense_solve(const SparseMatrix& k, const SparseMatrix& m, int count) {
    const Eigen::MatrixXd kd(k);
    const Eigen::MatrixXd md(m);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(kd, md);
    if (es.info() != Eigen::Success) throw ConvergenceError("solve_eigs: dense generalized solver failed");
    EigenPairs out;
    out.values = es.eigenvalues().head(count);
    out.vectors = es.eigenvectors().leftCols(count);
    fix_signs(out.vectors);
    for (int i = 0; i < count; ++i) {
        out.max_residual = std::max(out.max_residual, residual_of(k, m, out.vectors.col(i), out.values[i]));
    }
    return out;
}

}  // namespace

EigenPairs solve_eigs(const SparseMatrix& k, const SparseMatrix& m, int count, const EigenOptions& options) {
    const Eigen::Index n = k.rows();
    if (k.cols() != n || m.rows() != n || m.cols() != n) throw DomainError("solve_eigs: matrix sizes differ");
    if (count < 1 || count > n) throw DomainError("solve_eigs: invalid eigenpair count");
    if (n <= options.dense_limit) return dense_solve(k, m, count);

    Eigen::SimplicialLDLT<SparseMatrix> factor(k);
    if (factor.info() != Eigen::Success) throw ConvergenceError("solve_eigs: factorization of K failed");

    const Eigen::Index block = std::min<Eigen::Index>(n, count + options.guard_vectors);
    Eigen::MatrixXd x(n, block);
    std::mt19937_64 rng(20240917u);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    x.col(0).setOnes();
    for (Eigen::Index j = 1; j < block; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) x(i, j) = dist(rng);
    }

    EigenPairs out;
    Eigen::VectorXd ritz;
    for (int it = 1; it <= options.max_iterations; ++it) {
        const Eigen::MatrixXd mx = m * x;
        const Eigen::MatrixXd y = factor.solve(mx);
        const Eigen::MatrixXd ky = k * y;
        const Eigen::MatrixXd my = m * y;
        Eigen::MatrixXd kr = y.transpose() * ky;
        Eigen::MatrixXd mr = y.transpose() * my;
        kr = 0.5 * (kr + kr.transpose()).eval();
        mr = 0.5 * (mr + mr.transpose()).eval();
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(kr, mr);
        if (es.info() != Eigen::Success) throw ConvergenceError("solve_eigs: Rayleigh-Ritz step failed");
        ritz = es.eigenvalues();
        x = y * es.eigenvectors();

        double worst = 0.0;
        for (int i = 0; i < count; ++i) worst = std::max(worst, residual_of(k, m, x.col(i), ritz[i]));
        out.iterations = it;
        out.max_residual = worst;
        if (worst <= options.tolerance) {
            out.values = ritz.head(count);
            out.vectors = x.leftCols(count);
            fix_signs(out.vectors);
            return out;
        }
    }
    std::ostringstream msg;
    msg << "solve_eigs: residual " << out.max_residual << " above " << options.tolerance << " after "
        << options.max_iterations << " iterations";
    throw ConvergenceError(msg.str());
}

}  // namespace robin::fem
