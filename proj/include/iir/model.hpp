#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iir/bounds.hpp"
#include "iir/dual.hpp"

namespace iir {

/// Row-selection observation operator: picks fine-grid indices. Equivalent to
/// left-multiplication by the 0/1 selection matrix it induces.
struct ObservationOperator {
    std::vector<int> indices;

    void validate(int fine_dim) const {
        int prev = -1;
        for (int i : indices) {
            if (i <= prev) throw std::invalid_argument("ObservationOperator: indices must be strictly increasing");
            if (i < 0 || i >= fine_dim)
                throw std::invalid_argument("ObservationOperator: index out of fine-grid range");
            prev = i;
        }
    }

    Eigen::VectorXd apply(const Eigen::VectorXd& fine) const {
        Eigen::VectorXd out(static_cast<Eigen::Index>(indices.size()));
        for (std::size_t i = 0; i < indices.size(); ++i) out[static_cast<Eigen::Index>(i)] = fine[indices[i]];
        return out;
    }

    Eigen::MatrixXd selection_matrix(int fine_dim) const {
        Eigen::MatrixXd B = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(indices.size()), fine_dim);
        for (std::size_t i = 0; i < indices.size(); ++i) B(static_cast<Eigen::Index>(i), indices[i]) = 1.0;
        return B;
    }
};

enum class ErrorKind {
    NormalAdditive,   ///< y ~ N(prediction, sigma^2) per observation point
    LogNormal,        ///< log y ~ N(log prediction, sigma^2); predictions must stay positive
    GaussianMeanVar,  ///< model output is (mu, var); replicates y ~ N(mu, var)
};

struct ErrorModel {
    ErrorKind kind = ErrorKind::NormalAdditive;
    double sigma = 1.0;  ///< observation noise scale; unused for GaussianMeanVar
};

/// Observed data, flattened replicate-major.
struct Dataset {
    Eigen::VectorXd observations;
    int n_replicates = 1;
};

/// A model the analysis pipeline can work on: auxiliary mapping evaluated on a
/// fine grid (or grid-free), observation operator, error model, strictly
/// positive box bounds, and optional true-parameter metadata. The auxiliary
/// mapping is stored twice, instantiated for plain doubles and for Duals, so
/// derivatives propagate through the same code path.
struct ModelSpec {
    std::string name;
    int n_params = 0;
    std::vector<std::string> param_names;
    Box bounds;                      ///< original scale, strictly positive
    std::vector<double> fine_grid;   ///< abscissae; empty for grid-free models
    ObservationOperator obs;
    ErrorModel error;
    std::optional<Eigen::VectorXd> theta_true;

    std::function<std::vector<double>(const std::vector<double>&)> aux_real;
    std::function<std::vector<Dual>(const std::vector<Dual>&)> aux_dual;

    /// Register a generic auxiliary functor for both scalar types.
    template <class F>
    void set_auxiliary(F f) {
        aux_real = f;
        aux_dual = std::move(f);
    }

    void validate() const {
        if (n_params <= 0) throw std::invalid_argument("ModelSpec: n_params must be positive");
        if (bounds.dim() != n_params) throw std::invalid_argument("ModelSpec: bounds dimension mismatch");
        for (Eigen::Index i = 0; i < bounds.lo.size(); ++i)
            if (!(bounds.lo[i] > 0.0))
                throw std::invalid_argument("ModelSpec: bounds must be strictly positive (log scale)");
        if (!fine_grid.empty()) obs.validate(static_cast<int>(fine_grid.size()));
        if (error.kind != ErrorKind::GaussianMeanVar && !(error.sigma > 0.0))
            throw std::invalid_argument("ModelSpec: sigma must be positive");
    }

    /// Observation dimension of a single replicate.
    int obs_dim() const {
        if (error.kind == ErrorKind::GaussianMeanVar) return 1;
        return static_cast<int>(obs.indices.size());
    }
};

/// Auxiliary mapping on the fine grid. Model evaluation failures (e.g. ODE
/// divergence) propagate with the model name attached.
Eigen::VectorXd predict_fine(const ModelSpec& model, const Eigen::VectorXd& theta);

/// Fine prediction restricted to the observation indices; identity for
/// grid-free models whose operator covers the whole output.
Eigen::VectorXd predict_obs(const ModelSpec& model, const Eigen::VectorXd& theta);

/// Dual-valued fine prediction with theta seeded as independent variables.
std::vector<Dual> predict_fine_dual(const ModelSpec& model, const Eigen::VectorXd& theta);

void check_dataset(const ModelSpec& model, const Dataset& data);

}  // namespace iir
