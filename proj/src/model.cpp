#include "iir/model.hpp"

#include "iir/autodiff.hpp"
#include "iir/ode.hpp"

namespace iir {

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

Eigen::VectorXd predict_fine(const ModelSpec& model, const Eigen::VectorXd& theta) {
    if (theta.size() != model.n_params)
        throw std::invalid_argument(model.name + ": parameter dimension mismatch");
    std::vector<double> out;
    try {
        out = model.aux_real(to_std(theta));
    } catch (const std::exception& e) {
        throw std::runtime_error(model.name + ": auxiliary evaluation failed: " + e.what());
    }
    if (!model.fine_grid.empty() && out.size() != model.fine_grid.size())
        throw std::runtime_error(model.name + ": auxiliary output length does not match fine grid");
    return Eigen::Map<const Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(out.size()));
}

Eigen::VectorXd predict_obs(const ModelSpec& model, const Eigen::VectorXd& theta) {
    const Eigen::VectorXd fine = predict_fine(model, theta);
    if (model.error.kind == ErrorKind::GaussianMeanVar) return fine;
    return model.obs.apply(fine);
}

std::vector<Dual> predict_fine_dual(const ModelSpec& model, const Eigen::VectorXd& theta) {
    try {
        return model.aux_dual(seed_variables(theta));
    } catch (const IntegrationError&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(model.name + ": dual auxiliary evaluation failed: " + e.what());
    }
}

void check_dataset(const ModelSpec& model, const Dataset& data) {
    const Eigen::Index expected = static_cast<Eigen::Index>(data.n_replicates) * model.obs_dim();
    if (data.observations.size() != expected)
        throw std::invalid_argument(model.name + ": dataset length " +
                                    std::to_string(data.observations.size()) + " != replicates x obs dim " +
                                    std::to_string(expected));
}

}  // namespace iir
