#pragma once

#include "nominal.hpp"
#include "state_space.hpp"

namespace mrac {

// Adaptation gains. Two valid shapes:
//   adaptive: Gamma symmetric positive definite (p x p), gamma > 0
//   frozen:   Gamma == 0 and gamma == 0 (parameters held constant; used for
//             matched-parameter runs and decay tests)
// sign_kp is the known sign of the plant high-frequency gain, +1 or -1;
// it is a scenario input and never inferred from the plant model.
struct Gains {
    MatrixXd Gamma;
    double gamma = 0.0;
    double sign_kp = 1.0;

    [[nodiscard]] bool frozen() const { return gamma == 0.0; }
    void validate(int p) const;
};

// Controller-owned dynamic state. Filter banks not used by a scheme have
// size zero. zeta holds the p parallel W_m channels column-wise (channel
// output = row 0); xi_channel is the extra SISO W_m channel fed theta^T omega.
struct ControllerState {
    VectorXd theta;      // p
    double rho = 0.0;
    VectorXd fb_u;       // n-1, output-feedback schemes: a(s)/Lambda(s)[u]
    VectorXd fb_y;       // n-1, output-feedback schemes: a(s)/Lambda(s)[y]
    VectorXd fb_um;      // n-1, y_m-based schemes: a(s)/Lambda_e(s)[u_m]
    VectorXd fb_ym;      // n-1, y_m-based schemes: a(s)/Lambda_e(s)[y_m]
    MatrixXd zeta;       // n_star x p
    VectorXd xi_channel; // n_star

    // Filtered regressor zeta(t) = W_m(s)[omega](t), one value per channel.
    [[nodiscard]] VectorXd zeta_output() const { return zeta.row(0).transpose(); }
    // Current W_m(s)[theta^T omega](t).
    [[nodiscard]] double xi_channel_output() const { return xi_channel(0); }
};

// Regressor stacked to pair with the scheme's theta layout (see NominalDesign).
// Pass null for x / x_m when the scheme does not use them; a missing required
// signal raises an error naming it.
[[nodiscard]] VectorXd build_regressor(Scheme scheme, const VectorXd* x, double y,
                                       const VectorXd* x_m, double y_m, double u_m,
                                       const ControllerState& filters);

// u = theta^T omega.
[[nodiscard]] double control_output(const VectorXd& theta, const VectorXd& omega);

struct EstimationError {
    double eps = 0.0;  // e + rho * xi
    double xi = 0.0;   // theta^T zeta - W_m[theta^T omega]
    double m = 1.0;    // sqrt(1 + zeta^T zeta + xi^2)
};

[[nodiscard]] EstimationError estimation_error(double e, double rho, const VectorXd& theta,
                                               const VectorXd& zeta, double wm_theta_omega);

struct AdaptationRates {
    VectorXd theta_dot;
    double rho_dot = 0.0;
};

// Normalized gradient laws:
//   theta_dot = -Gamma sign_kp zeta eps / m^2,  rho_dot = -gamma xi eps / m^2.
// Frozen gains yield zero rates.
[[nodiscard]] AdaptationRates adaptation_rates(double eps, const VectorXd& zeta, double xi,
                                               double m, const Gains& gains);

// Diagnostic V = |rho_star| (theta - theta_star)^T Gamma^{-1} (theta - theta_star)
//              + (rho - rho_star)^2 / gamma.
// Returns 0 for frozen gains (nothing adapts, nothing to certify).
[[nodiscard]] double lyapunov_v(const VectorXd& theta, double rho, const NominalDesign& nominal,
                                const Gains& gains);

}  // namespace mrac
