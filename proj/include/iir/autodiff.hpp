#pragma once

#include <Eigen/Core>
#include <vector>

#include "iir/dual.hpp"

namespace iir {

/// Seed a parameter vector as independent Dual variables.
inline std::vector<Dual> seed_variables(const Eigen::VectorXd& x) {
    std::vector<Dual> v;
    v.reserve(static_cast<std::size_t>(x.size()));
    const auto n = static_cast<std::size_t>(x.size());
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(Dual::variable(x[static_cast<Eigen::Index>(i)], i, n));
    return v;
}

/// Gradient of a scalar function by one forward-mode pass.
/// `f` must accept std::vector<Dual> and return Dual.
template <class F>
Eigen::VectorXd gradient(F&& f, const Eigen::VectorXd& x) {
    const Dual y = f(seed_variables(x));
    Eigen::VectorXd g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        g[i] = y.deriv(static_cast<std::size_t>(i));
    return g;
}

/// Jacobian of a vector function by one forward-mode pass.
/// `f` must accept std::vector<Dual> and return std::vector<Dual>.
template <class F>
Eigen::MatrixXd jacobian(F&& f, const Eigen::VectorXd& x) {
    const std::vector<Dual> y = f(seed_variables(x));
    Eigen::MatrixXd J(static_cast<Eigen::Index>(y.size()), x.size());
    for (std::size_t r = 0; r < y.size(); ++r)
        for (Eigen::Index c = 0; c < x.size(); ++c)
            J(static_cast<Eigen::Index>(r), c) = y[r].deriv(static_cast<std::size_t>(c));
    return J;
}

/// Central finite-difference Jacobian, kept as an independent cross-check of
/// the forward-mode path (step 1e-6 * max(|x_i|, 1)).
template <class F>
Eigen::MatrixXd jacobian_fd(F&& f, const Eigen::VectorXd& x) {
    const Eigen::VectorXd y0 = f(x);
    Eigen::MatrixXd J(y0.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double h = 1e-6 * std::max(std::abs(x[i]), 1.0);
        Eigen::VectorXd xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        J.col(i) = (f(xp) - f(xm)) / (2.0 * h);
    }
    return J;
}

}  // namespace iir
