#include "iir/models.hpp"

#include <algorithm>

#include "iir/ode.hpp"
#include "iir/rng.hpp"

namespace iir::models {

namespace {

// Data realisation for the parameterised normal models (10 replicates of a
// single experiment, generated from the non-limit model; attached to both
// variants).
const std::vector<double> kStatData = {21.9, 22.3, 12.8, 16.4, 16.4,
                                       20.3, 16.2, 20.0, 19.7, 24.4};

// Single spatial sample of the flow model at the 19 interior observation
// points x = 5, 10, ..., 95.
const std::vector<double> kFlowData = {186.4,  402.6,  505.2,  756.1,  1144.1, 790.9, 1283.5,
                                       1647.6, 872.3,  1144.4, 1691.2, 1352.7, 1519.9, 1316.0,
                                       1437.1, 726.7,  952.3,  759.4,  272.0};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    return g;
}

std::vector<int> stride_indices(int first, int last, int step) {
    std::vector<int> idx;
    for (int i = first; i <= last; i += step) idx.push_back(i);
    return idx;
}

template <class T>
std::vector<T> stat_aux(bool binomial, const std::vector<T>& th) {
    const T mu = th[0] * th[1];
    const T var = binomial ? th[0] * th[1] * (1.0 - th[1]) : th[0] * th[1];
    return {mu, var};
}

template <class T>
std::vector<T> mm_aux(bool reduced, const std::vector<T>& th) {
    auto rhs = [reduced](double, const std::vector<T>& y, const std::vector<T>& p) -> std::vector<T> {
        if (reduced) return {-(p[0] / p[1]) * y[0]};
        return {-(p[0] * y[0]) / (p[1] + y[0])};
    };
    const auto prob = make_ode(rhs, 0.0, 20.0, std::vector<double>{1.0}, kFinePoints - 1);
    const auto traj = solve_ode(prob, th);
    std::vector<T> out;
    out.reserve(traj.size());
    for (const auto& row : traj) out.push_back(row[0]);
    return out;
}

// Piecewise quadratic head profile. Region 2 is kept in factored form so the
// downstream boundary h(L) = 0 holds exactly in floating point.
template <class T>
std::vector<T> flow_aux(const std::vector<T>& th) {
    const double L = kFlowLength;
    const T r1 = th[2] / th[0];
    const T r2 = th[2] / th[1];
    const T alpha = (3.0 * L / 8.0) * r2 + (L / 8.0) * r1;
    const T x2 = 2.0 * alpha / r2 - L;  // second root of the region-2 quadratic

    std::vector<T> h;
    h.reserve(kFinePoints);
    for (int i = 0; i < kFinePoints; ++i) {
        const double x = L * i / (kFinePoints - 1);
        if (x < L / 2.0)
            h.push_back(x * (alpha - 0.5 * r1 * x));
        else
            h.push_back(-0.5 * r2 * (x - L) * (x - x2));
    }
    return h;
}

ModelSpec make_stat(bool binomial) {
    ModelSpec m;
    m.name = binomial ? "stat-binomial" : "stat-poisson-limit";
    m.n_params = 2;
    m.param_names = {"n", "p"};
    m.bounds = Box((Eigen::VectorXd(2) << 1e-6, 1e-6).finished(),
                   (Eigen::VectorXd(2) << 500.0, 1.0).finished());
    m.obs.indices = {0, 1};
    m.error = {ErrorKind::GaussianMeanVar, 1.0};
    m.theta_true = (Eigen::VectorXd(2) << 100.0, 0.2).finished();
    m.set_auxiliary([binomial](const auto& th) { return stat_aux(binomial, th); });
    m.validate();
    return m;
}

ModelSpec make_mm(bool reduced) {
    ModelSpec m;
    m.name = reduced ? "mm-reduced" : "mm-full";
    m.n_params = 2;
    m.param_names = {"nu", "K"};
    m.bounds = Box((Eigen::VectorXd(2) << 1e-2, 1e-2).finished(),
                   (Eigen::VectorXd(2) << 1e2, 1e2).finished());
    m.fine_grid = linspace(0.0, 20.0, kFinePoints);
    m.obs.indices = stride_indices(0, 200, 20);  // 11 equally spaced times
    m.error = {ErrorKind::NormalAdditive, 0.05};
    m.theta_true = (Eigen::VectorXd(2) << 1.0, 5.0).finished();
    m.set_auxiliary([reduced](const auto& th) { return mm_aux(reduced, th); });
    m.validate();
    return m;
}

ModelSpec make_flow() {
    ModelSpec m;
    m.name = "flow";
    m.n_params = 3;
    m.param_names = {"T1", "T2", "R"};
    m.bounds = Box(Eigen::VectorXd::Constant(3, 0.1), Eigen::VectorXd::Constant(3, 5.0));
    m.fine_grid = linspace(0.0, kFlowLength, kFinePoints);
    m.obs.indices = stride_indices(10, 190, 10);  // 19 interior points
    m.error = {ErrorKind::LogNormal, 0.2};
    m.theta_true = (Eigen::VectorXd(3) << 3.0, 1.0, 1.0).finished();
    m.set_auxiliary([](const auto& th) { return flow_aux(th); });
    m.validate();
    return m;
}

}  // namespace

ModelSpec builtin(const std::string& name) {
    if (name == "stat-poisson-limit") return make_stat(false);
    if (name == "stat-binomial") return make_stat(true);
    if (name == "mm-full") return make_mm(false);
    if (name == "mm-reduced") return make_mm(true);
    if (name == "flow") return make_flow();
    throw std::invalid_argument("unknown model '" + name + "'; built-ins: stat-poisson-limit, "
                                "stat-binomial, mm-full, mm-reduced, flow");
}

std::vector<std::string> builtin_names() {
    return {"stat-poisson-limit", "stat-binomial", "mm-full", "mm-reduced", "flow"};
}

Dataset published_dataset(const std::string& model_name) {
    auto to_dataset = [](const std::vector<double>& v, int reps) {
        Dataset d;
        d.observations = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
        d.n_replicates = reps;
        return d;
    };
    if (model_name == "stat" || model_name.rfind("stat-", 0) == 0)
        return to_dataset(kStatData, 10);
    if (model_name == "flow")
        return to_dataset(kFlowData, 1);
    if (model_name == "mm" || model_name.rfind("mm-", 0) == 0)
        throw std::invalid_argument("no published data realisation for the Michaelis-Menten model; "
                                    "generate a seeded synthetic dataset instead");
    throw std::invalid_argument("unknown dataset '" + model_name + "'");
}

Dataset mm_synthetic_data(const ModelSpec& mm_model, std::uint64_t seed) {
    if (!mm_model.theta_true)
        throw std::invalid_argument("mm_synthetic_data: model lacks true parameters");
    const Eigen::VectorXd mean = predict_obs(mm_model, *mm_model.theta_true);
    Rng rng(seed);
    Dataset d;
    d.n_replicates = 1;
    d.observations = mean;
    for (Eigen::Index i = 0; i < d.observations.size(); ++i)
        d.observations[i] += mm_model.error.sigma * rng.normal();
    return d;
}

Dataset default_dataset(const ModelSpec& model, std::uint64_t seed) {
    if (model.name.rfind("mm-", 0) == 0) return mm_synthetic_data(model, seed);
    return published_dataset(model.name);
}

}  // namespace iir::models
