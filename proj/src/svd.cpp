#include "iir/svd.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace iir {

SvdFactors svd(const Eigen::MatrixXd& M) {
    if (!M.allFinite())
        throw std::invalid_argument("svd: non-finite input matrix");

    Eigen::JacobiSVD<Eigen::MatrixXd> dec(M, Eigen::ComputeThinU | Eigen::ComputeFullV);
    SvdFactors f;
    f.U = dec.matrixU();
    f.S = dec.singularValues();
    f.Vt = dec.matrixV().transpose();

    const Eigen::Index k = f.S.size();
    for (Eigen::Index r = 0; r < f.Vt.rows(); ++r) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index c = 0; c < f.Vt.cols(); ++c) {
            const double a = std::abs(f.Vt(r, c));
            if (a > best) {  // strict: ties keep the first index
                best = a;
                imax = c;
            }
        }
        if (f.Vt(r, imax) < 0.0) {
            f.Vt.row(r) = -f.Vt.row(r);
            if (r < k && r < f.U.cols()) f.U.col(r) = -f.U.col(r);
        }
    }
    return f;
}

int numerical_rank(const Eigen::VectorXd& S, double rel_tol) {
    if (S.size() == 0 || S[0] <= 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < S.size(); ++i)
        if (S[i] / S[0] >= rel_tol) ++rank;
    return rank;
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rel_tol) {
    const SvdFactors f = svd(M);
    const Eigen::Index n = M.cols();
    const int rank = numerical_rank(f.S, rel_tol);
    const Eigen::Index dim = n - rank;
    Eigen::MatrixXd N(n, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        N.col(j) = f.Vt.row(rank + j).transpose();
    return N;
}

double max_principal_angle(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    if (A.cols() != B.cols())
        throw std::invalid_argument("max_principal_angle: subspace dimensions differ");
    if (A.cols() == 0) return 0.0;
    if (A.rows() != B.rows())
        throw std::invalid_argument("max_principal_angle: ambient dimensions differ");

    Eigen::JacobiSVD<Eigen::MatrixXd> dec(A.transpose() * B);
    const double cmin = std::clamp(dec.singularValues().minCoeff(), -1.0, 1.0);
    return std::acos(cmin);
}

}  // namespace iir
