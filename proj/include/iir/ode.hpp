#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "iir/dual.hpp"

namespace iir {

/// Thrown when the integrator encounters a non-finite state.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(std::size_t step, const std::string& what)
        : std::runtime_error("integration failure at step " + std::to_string(step) + ": " + what),
          step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Fixed-step initial value problem. `Rhs` is callable as
/// rhs(t, state, params) -> state derivative, generic over the scalar type so
/// parameter sensitivities can flow through the integrator.
template <class Rhs>
struct OdeProblem {
    Rhs rhs;
    double t0 = 0.0;
    double t1 = 1.0;
    std::vector<double> initial_state;
    int n_steps = 1;
};

template <class Rhs>
OdeProblem<Rhs> make_ode(Rhs rhs, double t0, double t1, std::vector<double> y0, int n_steps) {
    if (!(t1 > t0)) throw std::invalid_argument("OdeProblem: requires t1 > t0");
    if (n_steps < 1) throw std::invalid_argument("OdeProblem: requires n_steps >= 1");
    return OdeProblem<Rhs>{std::move(rhs), t0, t1, std::move(y0), n_steps};
}

/// Classic fourth-order Runge-Kutta with fixed step (t1-t0)/n_steps.
/// Returns the state at the n_steps+1 equally spaced grid points, both
/// endpoints included. Throws IntegrationError naming the step index if the
/// state goes non-finite.
template <class T, class Rhs>
std::vector<std::vector<T>> solve_ode(const OdeProblem<Rhs>& prob, const std::vector<T>& params) {
    const double h = (prob.t1 - prob.t0) / prob.n_steps;
    const std::size_t dim = prob.initial_state.size();

    std::vector<T> y;
    y.reserve(dim);
    for (double v : prob.initial_state) y.push_back(T(v));

    std::vector<std::vector<T>> out;
    out.reserve(static_cast<std::size_t>(prob.n_steps) + 1);
    out.push_back(y);

    auto axpy = [dim](const std::vector<T>& a, double c, const std::vector<T>& b) {
        std::vector<T> r;
        r.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) r.push_back(a[i] + c * b[i]);
        return r;
    };

    for (int s = 0; s < prob.n_steps; ++s) {
        const double t = prob.t0 + s * h;
        const std::vector<T> k1 = prob.rhs(t, y, params);
        const std::vector<T> k2 = prob.rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1), params);
        const std::vector<T> k3 = prob.rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2), params);
        const std::vector<T> k4 = prob.rhs(t + h, axpy(y, h, k3), params);
        for (std::size_t i = 0; i < dim; ++i) {
            y[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!std::isfinite(value_of(y[i])))
                throw IntegrationError(static_cast<std::size_t>(s) + 1, "non-finite state component");
        }
        out.push_back(y);
    }
    return out;
}

}  // namespace iir
