#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace iir {

/// Axis-aligned box constraint, lower/upper per coordinate.
struct Box {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    Box() = default;
    Box(Eigen::VectorXd lower, Eigen::VectorXd upper)
        : lo(std::move(lower)), hi(std::move(upper)) {
        if (lo.size() != hi.size())
            throw std::invalid_argument("Box: lower/upper size mismatch");
        for (Eigen::Index i = 0; i < lo.size(); ++i)
            if (!(lo[i] < hi[i]))
                throw std::invalid_argument("Box: requires lo < hi componentwise");
    }

    Eigen::Index dim() const { return lo.size(); }

    bool contains(const Eigen::VectorXd& x, double tol = 0.0) const {
        if (x.size() != lo.size()) return false;
        for (Eigen::Index i = 0; i < x.size(); ++i)
            if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
        return true;
    }

    Eigen::VectorXd clamp(Eigen::VectorXd x) const {
        for (Eigen::Index i = 0; i < x.size(); ++i)
            x[i] = std::min(std::max(x[i], lo[i]), hi[i]);
        return x;
    }

    Eigen::VectorXd center() const { return 0.5 * (lo + hi); }
    Eigen::VectorXd range() const { return hi - lo; }

    /// Box with one coordinate removed (for nuisance sub-problems).
    Box without(Eigen::Index k) const {
        Eigen::VectorXd l(lo.size() - 1), h(hi.size() - 1);
        Eigen::Index j = 0;
        for (Eigen::Index i = 0; i < lo.size(); ++i) {
            if (i == k) continue;
            l[j] = lo[i];
            h[j] = hi[i];
            ++j;
        }
        return Box(l, h);
    }
};

}  // namespace iir
