#include "iir/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "iir/rng.hpp"

namespace iir {
namespace {

constexpr double kBad = 1e300;

struct Budget {
    int used = 0;
    int limit = 0;
    bool exhausted() const { return used >= limit; }
};

double eval_clamped(const Objective& f, const Box& box, const Eigen::VectorXd& x, Budget& budget) {
    ++budget.used;
    const double v = f(box.clamp(x));
    return std::isfinite(v) ? v : kBad;
}

struct Vertex {
    Eigen::VectorXd x;
    double f;
};

/// One Nelder-Mead run; simplex seeded around `start` with the given step.
Vertex nelder_mead(const Objective& f, const Box& box, const Eigen::VectorXd& start,
                   double step_frac, double f_tol, Budget& budget, bool& converged) {
    const Eigen::Index n = start.size();
    const Eigen::VectorXd range = box.range();

    std::vector<Vertex> simplex;
    simplex.push_back({box.clamp(start), eval_clamped(f, box, start, budget)});
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd v = simplex[0].x;
        double step = step_frac * range[i];
        if (v[i] + step > box.hi[i]) step = -step;  // fold at the upper bound
        v[i] += step;
        simplex.push_back({box.clamp(v), eval_clamped(f, box, v, budget)});
    }

    auto order = [&simplex]() {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    };
    order();

    converged = false;
    while (!budget.exhausted()) {
        const double spread = simplex.back().f - simplex.front().f;
        if (spread < f_tol) {
            converged = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i) centroid += simplex[i].x;
        centroid /= static_cast<double>(n);

        const Eigen::VectorXd& worst = simplex.back().x;
        Eigen::VectorXd xr = box.clamp(centroid + (centroid - worst));
        const double fr = eval_clamped(f, box, xr, budget);

        if (fr < simplex.front().f) {
            Eigen::VectorXd xe = box.clamp(centroid + 2.0 * (centroid - worst));
            const double fe = eval_clamped(f, box, xe, budget);
            simplex.back() = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < simplex[simplex.size() - 2].f) {
            simplex.back() = {xr, fr};
        } else {
            const bool outside = fr < simplex.back().f;
            Eigen::VectorXd xc = outside ? box.clamp(centroid + 0.5 * (xr - centroid))
                                         : box.clamp(centroid - 0.5 * (centroid - worst));
            const double fc = eval_clamped(f, box, xc, budget);
            if (fc < std::min(fr, simplex.back().f)) {
                simplex.back() = {xc, fc};
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 1; i < simplex.size(); ++i) {
                    simplex[i].x = box.clamp(simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x));
                    simplex[i].f = eval_clamped(f, box, simplex[i].x, budget);
                    if (budget.exhausted()) break;
                }
            }
        }
        order();
    }
    return simplex.front();
}

Vertex run_with_restarts(const Objective& f, const Box& box, const Eigen::VectorXd& start,
                         const OptimOptions& opts, int& evals, bool& converged) {
    Budget budget{0, opts.max_evals};
    bool conv = false;
    Vertex best = nelder_mead(f, box, start, 0.10, opts.f_tol, budget, conv);
    for (int r = 0; r < opts.restarts && !budget.exhausted(); ++r) {
        bool c2 = false;
        Vertex v = nelder_mead(f, box, best.x, 0.01, opts.f_tol, budget, c2);
        if (v.f < best.f) best = v;
        conv = c2;
    }
    evals += budget.used;
    converged = conv;
    return best;
}

}  // namespace

std::vector<Eigen::VectorXd> latin_hypercube_schedule(const Box& bounds, int count,
                                                      std::uint64_t seed) {
    constexpr int kStrata = 64;
    const Eigen::Index n = bounds.dim();
    Rng rng(seed);

    std::vector<Eigen::VectorXd> points;
    int produced = 0;
    while (produced < count) {
        // one Latin-hypercube block of kStrata points; taking a prefix keeps
        // earlier starts unchanged when the requested count grows
        std::vector<std::vector<int>> perm(static_cast<std::size_t>(n));
        for (auto& p : perm) {
            p.resize(kStrata);
            std::iota(p.begin(), p.end(), 0);
            for (int i = kStrata - 1; i > 0; --i)
                std::swap(p[static_cast<std::size_t>(i)],
                          p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        }
        for (int i = 0; i < kStrata && produced < count; ++i, ++produced) {
            Eigen::VectorXd x(n);
            for (Eigen::Index d = 0; d < n; ++d) {
                const double u = (perm[static_cast<std::size_t>(d)][i] + rng.uniform01()) / kStrata;
                x[d] = bounds.lo[d] + u * (bounds.hi[d] - bounds.lo[d]);
            }
            points.push_back(std::move(x));
        }
    }
    return points;
}

OptimResult minimize_box(const Objective& f, const Eigen::VectorXd& x0, const Box& bounds,
                         const OptimOptions& opts) {
    if (x0.size() != bounds.dim())
        throw std::invalid_argument("minimize_box: x0 dimension mismatch");
    if (!bounds.contains(x0))
        throw std::invalid_argument("minimize_box: x0 outside bounds");

    OptimResult result;
    result.n_evals = 0;

    std::vector<Eigen::VectorXd> starts{x0};
    for (auto& p : latin_hypercube_schedule(bounds, opts.multistart, opts.seed))
        starts.push_back(std::move(p));

    bool have = false;
    for (const auto& s : starts) {
        bool conv = false;
        Vertex v = run_with_restarts(f, bounds, s, opts, result.n_evals, conv);
        if (!have || v.f < result.fmin) {
            result.argmin = v.x;
            result.fmin = v.f;
            result.converged = conv;
            have = true;
        }
    }
    return result;
}

}  // namespace iir
