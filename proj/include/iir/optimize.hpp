#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>

#include "iir/bounds.hpp"

namespace iir {

struct OptimOptions {
    double f_tol = 1e-10;   ///< terminate when simplex f-spread drops below this
    int max_evals = 5000;   ///< evaluation budget per start
    int multistart = 5;     ///< Latin-hypercube starts in addition to x0
    int restarts = 2;       ///< simplex rebuilds from the incumbent per start
    std::uint64_t seed = 0;
};

struct OptimResult {
    Eigen::VectorXd argmin;
    double fmin = 0.0;
    int n_evals = 0;
    bool converged = false;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Bounded Nelder-Mead. Proposals are clamped to the box before evaluation;
/// each run is restarted from its (possibly clamped) incumbent with a smaller
/// simplex. Runs from x0 plus `multistart` Latin-hypercube points drawn from a
/// fixed 64-stratum schedule, so enlarging the start count only appends runs.
/// Deterministic given the seed. Non-finite objective values are treated as
/// +1e300. Throws std::invalid_argument if x0 lies outside the bounds.
OptimResult minimize_box(const Objective& f, const Eigen::VectorXd& x0, const Box& bounds,
                         const OptimOptions& opts = {});

/// First `count` points of the seeded 64-stratum Latin-hypercube schedule.
std::vector<Eigen::VectorXd> latin_hypercube_schedule(const Box& bounds, int count,
                                                      std::uint64_t seed);

}  // namespace iir
