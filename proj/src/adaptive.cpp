#include "adaptive.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mrac {

void Gains::validate(int p) const {
    if (sign_kp != 1.0 && sign_kp != -1.0)
        throw std::invalid_argument("gains: sign_kp must be +1 or -1");
    if (Gamma.rows() != p || Gamma.cols() != p)
        throw std::invalid_argument("gains: Gamma must be " + std::to_string(p) + "x" +
                                    std::to_string(p));
    if (!Gamma.allFinite() || !std::isfinite(gamma))
        throw std::invalid_argument("gains: non-finite entry");

    if (gamma == 0.0) {
        if (!Gamma.isZero(0.0))
            throw std::invalid_argument("gains: frozen mode needs both Gamma = 0 and gamma = 0");
        return;
    }
    if (gamma < 0.0) throw std::invalid_argument("gains: gamma must be positive");
    if ((Gamma - Gamma.transpose()).norm() > 1e-12 * std::max(1.0, Gamma.norm()))
        throw std::invalid_argument("gains: Gamma must be symmetric");
    Eigen::LLT<MatrixXd> llt(Gamma);
    if (llt.info() != Eigen::Success || Gamma.diagonal().minCoeff() <= 0.0)
        throw std::invalid_argument("gains: Gamma must be positive definite");
}

namespace {

[[noreturn]] void missing_signal(Scheme s, const char* what) {
    throw std::invalid_argument(std::string("build_regressor: scheme ") + scheme_name(s) +
                                " requires " + what);
}

}  // namespace

VectorXd build_regressor(Scheme scheme, const VectorXd* x, double y, const VectorXd* x_m,
                         double y_m, double u_m, const ControllerState& filters) {
    VectorXd w;
    switch (scheme) {
        case Scheme::SfbXm:
            if (x == nullptr) missing_signal(scheme, "the plant state x");
            if (x_m == nullptr) missing_signal(scheme, "the reference state x_m");
            w.resize(x->size() + x_m->size() + 1);
            w << *x, *x_m, u_m;
            break;
        case Scheme::SfbYm:
            if (x == nullptr) missing_signal(scheme, "the plant state x");
            w.resize(x->size() + filters.fb_um.size() + filters.fb_ym.size() + 2);
            w << *x, filters.fb_um, filters.fb_ym, y_m, u_m;
            break;
        case Scheme::OfbXm:
            if (x_m == nullptr) missing_signal(scheme, "the reference state x_m");
            w.resize(filters.fb_u.size() + filters.fb_y.size() + 1 + x_m->size() + 1);
            w << filters.fb_u, filters.fb_y, y, *x_m, u_m;
            break;
        case Scheme::OfbYm:
            w.resize(filters.fb_u.size() + filters.fb_y.size() + filters.fb_um.size() +
                     filters.fb_ym.size() + 3);
            w << filters.fb_u, filters.fb_y, y, filters.fb_um, filters.fb_ym, y_m, u_m;
            break;
    }
    return w;
}

double control_output(const VectorXd& theta, const VectorXd& omega) {
    if (theta.size() != omega.size())
        throw std::invalid_argument("control_output: theta/omega dimension mismatch");
    return theta.dot(omega);
}

EstimationError estimation_error(double e, double rho, const VectorXd& theta,
                                 const VectorXd& zeta, double wm_theta_omega) {
    if (theta.size() != zeta.size())
        throw std::invalid_argument("estimation_error: theta/zeta dimension mismatch");
    EstimationError out;
    out.xi = theta.dot(zeta) - wm_theta_omega;
    out.eps = e + rho * out.xi;
    out.m = std::sqrt(1.0 + zeta.squaredNorm() + out.xi * out.xi);
    return out;
}

AdaptationRates adaptation_rates(double eps, const VectorXd& zeta, double xi, double m,
                                 const Gains& gains) {
    AdaptationRates out;
    if (gains.frozen()) {
        out.theta_dot = VectorXd::Zero(zeta.size());
        return out;
    }
    const double m2 = m * m;
    out.theta_dot = -(gains.sign_kp * eps / m2) * (gains.Gamma * zeta);
    out.rho_dot = -gains.gamma * xi * eps / m2;
    return out;
}

double lyapunov_v(const VectorXd& theta, double rho, const NominalDesign& nominal,
                  const Gains& gains) {
    if (gains.frozen()) return 0.0;
    if (theta.size() != nominal.theta_star.size())
        throw std::invalid_argument("lyapunov_v: theta dimension mismatch");
    const VectorXd tilde = theta - nominal.theta_star;
    const VectorXd solved = Eigen::LLT<MatrixXd>(gains.Gamma).solve(tilde);
    const double rtilde = rho - nominal.rho_star;
    return std::abs(nominal.rho_star) * tilde.dot(solved) + rtilde * rtilde / gains.gamma;
}

}  // namespace mrac
