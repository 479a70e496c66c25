#include "iir/reparam.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>

#include "iir/autodiff.hpp"

namespace iir {

namespace {

double round_to_grid(double x, double granularity) {
    // std::round ties away from zero
    return std::round(x / granularity) * granularity;
}

/// Sign for a coefficient row: prefer the representative whose rounded
/// monomial evaluates to >= 1 at the reference point. |log value| below 1e-12
/// counts as a tie and keeps the incoming (svd-convention) sign.
double orientation_sign(const Eigen::VectorXd& row, const Eigen::VectorXd& theta_ref,
                        double granularity) {
    const Eigen::VectorXd rounded = round_exponents(row, granularity);
    double logval = 0.0;
    for (Eigen::Index i = 0; i < rounded.size(); ++i)
        logval += rounded[i] * std::log(theta_ref[i]);
    if (std::abs(logval) < 1e-12) return 1.0;
    return logval > 0.0 ? 1.0 : -1.0;
}

std::string format_power(const std::string& name, double e) {
    if (e == 1.0) return name;
    if (e == 0.5) return "sqrt(" + name + ")";
    std::ostringstream os;
    os << name << "^" << e;
    return os.str();
}

std::string product_string(const std::vector<std::pair<std::string, double>>& factors) {
    // group the exponent-1/2 factors under a single sqrt
    std::vector<std::string> plain, roots;
    for (const auto& [name, e] : factors) {
        if (e == 0.5)
            roots.push_back(name);
        else
            plain.push_back(format_power(name, e));
    }
    if (!roots.empty()) {
        std::string inner = roots[0];
        for (std::size_t i = 1; i < roots.size(); ++i) inner += "*" + roots[i];
        plain.push_back(roots.size() > 1 ? "sqrt(" + inner + ")" : "sqrt(" + inner + ")");
    }
    std::string out = plain[0];
    for (std::size_t i = 1; i < plain.size(); ++i) out += "*" + plain[i];
    return out;
}

}  // namespace

std::string to_string(IdClass c) {
    switch (c) {
        case IdClass::Well: return "well-identified";
        case IdClass::Poor: return "poorly-identified";
        case IdClass::StructuralZero: return "structurally-non-identified";
    }
    return "?";
}

int SvdAnalysis::rank_structural() const {
    int r = 0;
    for (IdClass c : classification)
        if (c != IdClass::StructuralZero) ++r;
    return r;
}

Eigen::VectorXd Reparameterisation::forward(const Eigen::VectorXd& theta) const {
    return (exponents * theta.array().log().matrix()).array().exp();
}

Eigen::VectorXd Reparameterisation::inverse(const Eigen::VectorXd& psi) const {
    return (inverse_exponents * psi.array().log().matrix()).array().exp();
}

Eigen::MatrixXd log_jacobian(const ModelSpec& model, const Eigen::VectorXd& theta_ref) {
    if (!model.bounds.contains(theta_ref))
        throw std::invalid_argument(model.name + ": reference point outside bounds");
    const auto n = static_cast<std::size_t>(theta_ref.size());
    std::vector<Dual> vars;
    vars.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = theta_ref[static_cast<Eigen::Index>(i)];
        // d theta / d log(theta_i) = theta_i, seeded directly
        vars.push_back(Dual::seeded(t, i, n, t));
    }
    const std::vector<Dual> y = model.aux_dual(vars);
    Eigen::MatrixXd J(static_cast<Eigen::Index>(y.size()), theta_ref.size());
    for (std::size_t r = 0; r < y.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            J(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                y[r].deriv(c);
    return J;
}

SvdAnalysis analyze(const ModelSpec& model, const Eigen::VectorXd& theta_ref,
                    const Tolerances& tols) {
    const Eigen::MatrixXd J = log_jacobian(model, theta_ref);
    const SvdFactors f = svd(J);

    SvdAnalysis a;
    a.singular_values = f.S;
    a.right_vectors = f.Vt;
    a.reference_point = theta_ref;
    a.param_names = model.param_names;
    a.tols = tols;

    const Eigen::Index n = f.Vt.rows();
    const double s1 = f.S.size() > 0 ? f.S[0] : 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ratio = (i < f.S.size() && s1 > 0.0) ? f.S[i] / s1 : 0.0;
        if (ratio < tols.structural)
            a.classification.push_back(IdClass::StructuralZero);
        else if (ratio < tols.practical)
            a.classification.push_back(IdClass::Poor);
        else
            a.classification.push_back(IdClass::Well);

        const double s = orientation_sign(f.Vt.row(i), theta_ref, tols.granularity);
        a.right_vectors.row(i) = s * f.Vt.row(i);
    }
    return a;
}

InvarianceReport invariance_check(const ModelSpec& model,
                                  const std::vector<Eigen::VectorXd>& points,
                                  const Tolerances& tols, double angle_tol) {
    if (points.size() < 2)
        throw std::invalid_argument("invariance_check: needs at least two points");

    InvarianceReport rep;
    std::vector<Eigen::MatrixXd> nulls;
    for (const auto& p : points) {
        const Eigen::MatrixXd J = log_jacobian(model, p);
        const Eigen::MatrixXd N = null_space(J, tols.structural);
        const SvdFactors f = svd(J);
        rep.ranks.push_back(numerical_rank(f.S, tols.structural));
        rep.null_dims.push_back(static_cast<int>(N.cols()));
        nulls.push_back(N);
    }

    for (std::size_t i = 1; i < nulls.size(); ++i)
        if (rep.null_dims[i] != rep.null_dims[0]) {
            rep.pass = false;
            rep.message = "structural null-space dimension differs between reference points";
            return rep;
        }

    if (rep.null_dims[0] == 0) {
        rep.pass = true;
        rep.message = "full structural rank at every point (empty null space); vacuous pass";
        return rep;
    }

    rep.max_angle = 0.0;
    for (std::size_t i = 0; i < nulls.size(); ++i)
        for (std::size_t j = i + 1; j < nulls.size(); ++j)
            rep.max_angle = std::max(rep.max_angle, max_principal_angle(nulls[i], nulls[j]));
    rep.pass = rep.max_angle < angle_tol;
    rep.message = rep.pass ? "null space invariant across reference points"
                           : "null space varies between reference points";
    return rep;
}

Eigen::VectorXd round_exponents(const Eigen::VectorXd& row, double granularity) {
    const double maxmag = row.cwiseAbs().maxCoeff();
    if (!(maxmag > 0.0))
        throw std::invalid_argument("round_exponents: all entries negligible");
    Eigen::VectorXd out = row / maxmag;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (std::abs(row[i]) <= 1e-6 * maxmag)
            out[i] = 0.0;
        else
            out[i] = round_to_grid(out[i], granularity);
    }
    return out;
}

Reparameterisation build_reparam(const SvdAnalysis& analysis, bool rounded) {
    const Eigen::Index n = analysis.right_vectors.rows();
    Reparameterisation rp;
    rp.rounded = rounded;
    rp.param_names = analysis.param_names;
    rp.classification = analysis.classification;
    rp.exponents.resize(n, n);

    for (Eigen::Index i = 0; i < n; ++i) {
        if (rounded)
            rp.exponents.row(i) =
                round_exponents(analysis.right_vectors.row(i), analysis.tols.granularity);
        else
            rp.exponents.row(i) = analysis.right_vectors.row(i);
        rp.labels.push_back(monomial_label(rp.exponents.row(i), analysis.param_names));
    }

    if (!rounded) {
        // oriented rows of an orthogonal matrix: inverse is the transpose
        rp.inverse_exponents = rp.exponents.transpose();
    } else {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(rp.exponents);
        if (!lu.isInvertible())
            throw std::invalid_argument(
                "build_reparam: rounded exponent matrix is singular; use unrounded coordinates");
        rp.inverse_exponents = lu.inverse();
    }
    return rp;
}

std::string monomial_label(const Eigen::VectorXd& row, const std::vector<std::string>& names) {
    std::vector<std::pair<std::string, double>> num, den;
    for (Eigen::Index i = 0; i < row.size(); ++i) {
        const double e = row[i];
        if (e == 0.0) continue;
        const std::string nm = i < static_cast<Eigen::Index>(names.size())
                                   ? names[static_cast<std::size_t>(i)]
                                   : ("x" + std::to_string(i));
        if (e > 0.0)
            num.emplace_back(nm, e);
        else
            den.emplace_back(nm, -e);
    }
    if (num.empty() && den.empty()) return "1";
    std::string out = num.empty() ? "1" : product_string(num);
    if (!den.empty()) {
        const std::string d = product_string(den);
        const bool needs_parens = den.size() > 1 && d.find('*') != std::string::npos;
        out += "/" + (needs_parens ? "(" + d + ")" : d);
    }
    return out;
}

Eigen::VectorXd center_on_null(const Box& bounds, const Eigen::VectorXd& theta,
                               const Eigen::MatrixXd& null_basis) {
    if (null_basis.cols() == 0) return theta;
    const Eigen::VectorXd lt = theta.array().log();
    const Eigen::VectorXd lc = 0.5 * (bounds.lo.array().log() + bounds.hi.array().log());
    Eigen::VectorXd shift = null_basis * (null_basis.transpose() * (lc - lt));

    // back off along the shift until the point is inside the box
    for (int k = 0; k < 60; ++k) {
        const Eigen::VectorXd cand = (lt + shift).array().exp();
        if (bounds.contains(cand, 1e-12)) return bounds.clamp(cand);
        shift *= 0.5;
    }
    return theta;
}

FisherReport fisher_rank_check(const ModelSpec& model, const Dataset& data,
                               const Eigen::VectorXd& theta_hat, const Tolerances& tols,
                               GridLevel level) {
    // original-scale Jacobian of the auxiliary mapping
    Eigen::MatrixXd Phi = jacobian([&model](const std::vector<Dual>& th) { return model.aux_dual(th); },
                                   theta_hat);
    Eigen::VectorXd phi_hat = predict_fine(model, theta_hat);
    if (level == GridLevel::Observation && model.error.kind != ErrorKind::GaussianMeanVar) {
        const Eigen::MatrixXd B = model.obs.selection_matrix(static_cast<int>(model.fine_grid.size()));
        Phi = B * Phi;
        phi_hat = model.obs.apply(phi_hat);
    }

    // information weight of the error model at the fitted prediction
    Eigen::VectorXd w(Phi.rows());
    const double s2 = model.error.sigma * model.error.sigma;
    switch (model.error.kind) {
        case ErrorKind::NormalAdditive:
            w.setConstant(1.0 / s2);
            break;
        case ErrorKind::LogNormal:
            for (Eigen::Index i = 0; i < w.size(); ++i)
                w[i] = 1.0 / (s2 * phi_hat[i] * phi_hat[i]);
            break;
        case ErrorKind::GaussianMeanVar: {
            const double k = static_cast<double>(data.n_replicates);
            const double v = phi_hat[1];
            w[0] = k / v;
            w[1] = k / (2.0 * v * v);
            break;
        }
    }

    const Eigen::MatrixXd fisher = Phi.transpose() * w.asDiagonal() * Phi;

    FisherReport rep;
    rep.level = level;
    rep.sv_jacobian = svd(Phi).S;
    rep.sv_fisher = svd(fisher).S;
    rep.rank_jacobian = numerical_rank(rep.sv_jacobian, tols.structural);
    rep.rank_fisher = numerical_rank(rep.sv_fisher, tols.structural);
    rep.pass = rep.rank_jacobian == rep.rank_fisher;
    return rep;
}

}  // namespace iir
