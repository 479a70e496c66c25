#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "iir/model.hpp"
#include "iir/svd.hpp"

namespace iir {

/// Identifiability class of one parameter combination, judged on singular
/// value ratios sigma_i / sigma_1.
enum class IdClass { Well, Poor, StructuralZero };

std::string to_string(IdClass c);

struct Tolerances {
    double structural = 1e-8;  ///< below: structurally non-identified
    double practical = 1e-1;   ///< below (and above structural): poorly identified
    double granularity = 0.5;  ///< rounding grid for exponent entries
};

/// SVD of the log-space Jacobian at a reference point, with per-combination
/// identifiability classification. Rows of right_vectors are the
/// sign-oriented right-singular vectors (coefficients over log-parameters).
struct SvdAnalysis {
    Eigen::VectorXd singular_values;
    Eigen::MatrixXd right_vectors;    ///< n x n, rows = oriented Vt rows
    Eigen::VectorXd reference_point;  ///< original scale
    std::vector<std::string> param_names;
    Tolerances tols;
    std::vector<IdClass> classification;

    int rank_structural() const;
};

/// Monomial coordinate change psi(theta) = exp(A log theta). Rows of the
/// exponent matrix are coefficient vectors over log-parameters; unrounded rows
/// are orthonormal and invert by transpose, rounded rows invert by explicit
/// matrix inverse.
struct Reparameterisation {
    Eigen::MatrixXd exponents;      ///< n x n matrix A
    Eigen::MatrixXd inverse_exponents;
    std::vector<std::string> labels;
    std::vector<std::string> param_names;
    std::vector<IdClass> classification;
    bool rounded = false;

    Eigen::VectorXd forward(const Eigen::VectorXd& theta) const;
    Eigen::VectorXd inverse(const Eigen::VectorXd& psi) const;
};

/// Jacobian of the fine-grid auxiliary mapping with respect to log-parameters
/// (forward-mode pass through theta = exp(theta*)). theta_ref must be strictly
/// inside the model bounds.
Eigen::MatrixXd log_jacobian(const ModelSpec& model, const Eigen::VectorXd& theta_ref);

/// Full SVD of the log-space Jacobian with classification by singular value
/// ratios. Right-singular vectors are sign-normalized by the svd() convention
/// and then oriented so the rounded monomial evaluates to >= 1 at the
/// reference point (ties keep the svd sign).
SvdAnalysis analyze(const ModelSpec& model, const Eigen::VectorXd& theta_ref,
                    const Tolerances& tols = {});

/// Numerical surrogate for the invariance condition: the structural null
/// space computed at any interior point must be the same subspace.
struct InvarianceReport {
    bool pass = false;
    double max_angle = 0.0;     ///< radians, max over point pairs
    std::vector<int> ranks;     ///< structural rank at each point
    std::vector<int> null_dims;
    std::string message;
};

InvarianceReport invariance_check(const ModelSpec& model,
                                  const std::vector<Eigen::VectorXd>& points,
                                  const Tolerances& tols = {}, double angle_tol = 1e-6);

/// Scale a coefficient row by its largest-magnitude entry and round each
/// entry to the nearest multiple of `granularity` (ties away from zero).
/// Entries below 1e-6 of the largest magnitude are zeroed first. Throws on an
/// all-negligible (zero) row.
Eigen::VectorXd round_exponents(const Eigen::VectorXd& row, double granularity = 0.5);

/// Assemble the coordinate change from an analysis. With rounded=true the
/// exponent rows are the rounded integer/half-integer combinations; the
/// rounded matrix must be invertible (falls back with an error advising
/// unrounded coordinates otherwise).
Reparameterisation build_reparam(const SvdAnalysis& analysis, bool rounded);

/// Human-readable monomial, e.g. [1,-0.5,-0.5] over (T1,T2,R) renders as
/// "T1/sqrt(T2*R)".
std::string monomial_label(const Eigen::VectorXd& row, const std::vector<std::string>& names);

/// Shift theta along the structural null space (columns of null_basis, in
/// log-space) toward the log-center of the box. The likelihood is invariant
/// along exact structural null directions, so this picks a canonical
/// representative of a non-unique MLE ridge. The result stays inside the box.
Eigen::VectorXd center_on_null(const Box& bounds, const Eigen::VectorXd& theta,
                               const Eigen::MatrixXd& null_basis);

enum class GridLevel { Solution, Observation };

struct FisherReport {
    GridLevel level = GridLevel::Solution;
    int rank_jacobian = 0;
    int rank_fisher = 0;
    bool pass = false;
    Eigen::VectorXd sv_jacobian;
    Eigen::VectorXd sv_fisher;
};

/// Observed-Fisher rank cross-check at a (possibly non-unique) MLE: builds
/// J_fisher = Phi' * W * Phi from the original-scale Jacobian Phi at the
/// chosen grid level and the error model's information weight W at the fitted
/// prediction, then compares numerical ranks at the structural tolerance.
FisherReport fisher_rank_check(const ModelSpec& model, const Dataset& data,
                               const Eigen::VectorXd& theta_hat, const Tolerances& tols = {},
                               GridLevel level = GridLevel::Solution);

}  // namespace iir
