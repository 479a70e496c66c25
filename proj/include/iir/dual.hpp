#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace iir {

/// Forward-mode scalar carrying a value and a vector of partial derivatives,
/// one slot per independent variable. Elementary operations propagate exact
/// derivatives by the chain rule. A Dual with an empty derivative vector is a
/// constant (all partials zero); mixed-size operands are otherwise rejected.
class Dual {
public:
    Dual() : value_(0.0) {}
    explicit Dual(double v) : value_(v) {}
    Dual(double v, std::vector<double> derivs) : value_(v), derivs_(std::move(derivs)) {}

    /// Independent variable: unit derivative in slot `index` of `n` slots.
    static Dual variable(double v, std::size_t index, std::size_t n) {
        std::vector<double> d(n, 0.0);
        d.at(index) = 1.0;
        return Dual(v, std::move(d));
    }

    /// Variable with a caller-supplied seed derivative (chain-rule seeding).
    static Dual seeded(double v, std::size_t index, std::size_t n, double seed) {
        std::vector<double> d(n, 0.0);
        d.at(index) = seed;
        return Dual(v, std::move(d));
    }

    double value() const { return value_; }
    const std::vector<double>& derivs() const { return derivs_; }
    bool is_constant() const { return derivs_.empty(); }

    /// Partial derivative in slot i (0 for constants).
    double deriv(std::size_t i) const { return derivs_.empty() ? 0.0 : derivs_.at(i); }

    Dual operator-() const {
        Dual r(*this);
        r.value_ = -r.value_;
        for (double& d : r.derivs_) d = -d;
        return r;
    }

    friend Dual operator+(const Dual& a, const Dual& b) {
        Dual r = combine(a, b);
        r.value_ = a.value_ + b.value_;
        for (std::size_t i = 0; i < r.derivs_.size(); ++i)
            r.derivs_[i] = a.deriv(i) + b.deriv(i);
        return r;
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        Dual r = combine(a, b);
        r.value_ = a.value_ - b.value_;
        for (std::size_t i = 0; i < r.derivs_.size(); ++i)
            r.derivs_[i] = a.deriv(i) - b.deriv(i);
        return r;
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        Dual r = combine(a, b);
        r.value_ = a.value_ * b.value_;
        for (std::size_t i = 0; i < r.derivs_.size(); ++i)
            r.derivs_[i] = a.deriv(i) * b.value_ + a.value_ * b.deriv(i);
        return r;
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        Dual r = combine(a, b);
        r.value_ = a.value_ / b.value_;
        const double inv2 = 1.0 / (b.value_ * b.value_);
        for (std::size_t i = 0; i < r.derivs_.size(); ++i)
            r.derivs_[i] = (a.deriv(i) * b.value_ - a.value_ * b.deriv(i)) * inv2;
        return r;
    }

    friend Dual operator+(const Dual& a, double b) { return a + Dual(b); }
    friend Dual operator+(double a, const Dual& b) { return Dual(a) + b; }
    friend Dual operator-(const Dual& a, double b) { return a - Dual(b); }
    friend Dual operator-(double a, const Dual& b) { return Dual(a) - b; }
    friend Dual operator*(const Dual& a, double b) { return a * Dual(b); }
    friend Dual operator*(double a, const Dual& b) { return Dual(a) * b; }
    friend Dual operator/(const Dual& a, double b) { return a / Dual(b); }
    friend Dual operator/(double a, const Dual& b) { return Dual(a) / b; }

    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }

    friend bool operator<(const Dual& a, const Dual& b) { return a.value_ < b.value_; }
    friend bool operator>(const Dual& a, const Dual& b) { return a.value_ > b.value_; }
    friend bool operator<=(const Dual& a, const Dual& b) { return a.value_ <= b.value_; }
    friend bool operator>=(const Dual& a, const Dual& b) { return a.value_ >= b.value_; }
    friend bool operator<(const Dual& a, double b) { return a.value_ < b; }
    friend bool operator>(const Dual& a, double b) { return a.value_ > b; }

private:
    // Result skeleton with the common derivative length; rejects mismatches.
    static Dual combine(const Dual& a, const Dual& b) {
        Dual r;
        if (!a.derivs_.empty() && !b.derivs_.empty() && a.derivs_.size() != b.derivs_.size())
            throw std::logic_error("Dual: operands carry different derivative lengths");
        r.derivs_.resize(std::max(a.derivs_.size(), b.derivs_.size()), 0.0);
        return r;
    }

    double value_;
    std::vector<double> derivs_;
};

inline Dual exp(const Dual& x) {
    const double e = std::exp(x.value());
    std::vector<double> d(x.derivs());
    for (double& v : d) v *= e;
    return Dual(e, std::move(d));
}

inline Dual log(const Dual& x) {
    if (!(x.value() > 0.0))
        throw std::domain_error("Dual log: non-positive argument");
    std::vector<double> d(x.derivs());
    for (double& v : d) v /= x.value();
    return Dual(std::log(x.value()), std::move(d));
}

inline Dual sqrt(const Dual& x) {
    if (x.value() < 0.0)
        throw std::domain_error("Dual sqrt: negative argument");
    const double s = std::sqrt(x.value());
    std::vector<double> d(x.derivs());
    for (double& v : d) v *= 0.5 / s;
    return Dual(s, std::move(d));
}

inline Dual pow(const Dual& x, double p) {
    const double v = std::pow(x.value(), p);
    std::vector<double> d(x.derivs());
    const double slope = p * std::pow(x.value(), p - 1.0);
    for (double& w : d) w *= slope;
    return Dual(v, std::move(d));
}

inline Dual pow(const Dual& x, const Dual& p) {
    // x^p = exp(p log x); requires x > 0 for a defined derivative.
    return exp(p * log(x));
}

/// Value extraction shared by generic code paths.
inline double value_of(double x) { return x; }
inline double value_of(const Dual& x) { return x.value(); }

}  // namespace iir
