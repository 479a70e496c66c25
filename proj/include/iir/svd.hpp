#pragma once

#include <Eigen/Core>

namespace iir {

/// Full SVD factors M = U * diag(S) * Vt.topRows(k), k = min(m, n).
/// U is m x k column-orthonormal, S holds the k singular values in
/// non-increasing order, Vt is the full n x n row-orthonormal matrix.
struct SvdFactors {
    Eigen::MatrixXd U;
    Eigen::VectorXd S;
    Eigen::MatrixXd Vt;

    Eigen::MatrixXd reconstruct() const {
        const Eigen::Index k = S.size();
        return U * S.asDiagonal() * Vt.topRows(k);
    }
};

/// SVD with a deterministic sign convention: in each right-singular vector
/// (row of Vt), the first entry of largest magnitude is made positive; the
/// matching column of U is flipped along with it. Throws std::invalid_argument
/// on non-finite input.
SvdFactors svd(const Eigen::MatrixXd& M);

/// Numerical rank: number of singular values with S[i]/S[0] >= rel_tol.
int numerical_rank(const Eigen::VectorXd& S, double rel_tol);

/// Orthonormal basis (columns) of the numerical null space of M at the given
/// relative tolerance. May have zero columns.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rel_tol);

/// Largest principal angle (radians) between the subspaces spanned by the
/// columns of A and B. Both must be orthonormal, same ambient dimension and
/// same subspace dimension. Two empty subspaces give angle 0.
double max_principal_angle(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

}  // namespace iir
