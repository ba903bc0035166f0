#pragma once

#include "polynomial.hpp"
#include "state_space.hpp"

namespace mrac {

// Parametrization of r_m = P_m(s)[y_m] from the reference state:
// r_m = alpha1^T x_m + alpha2 u_m, with alpha2 = 0 when the reference
// relative degree exceeds the plant's.
struct RmParamXm {
    VectorXd alpha1;
    double alpha2 = 0.0;
};

RmParamXm rm_param_xm(const StateSpace& ref, const Polynomial& pm, int n_star);

// Reduced-order observer of the reference state from (u_m, y_m):
// in transformed coordinates xb = T x_m (first coordinate is y_m), the
// unmeasured part is estimated as xb_2 ~ w_m + L_r y_m where
//   w_m' = F w_m + g_u u_m + g_y y_m,
// and steady-state w_m = Theta1^T a(s)/Lambda_e(s)[u_m]
//                        + Theta2^T a(s)/Lambda_e(s)[y_m],
// with Theta(j, i) = coefficient of s^j in component i of the resolvent
// response (sI - F)^{-1} g.
struct ObserverDesign {
    MatrixXd T;        // basis change, row 0 = c_m
    MatrixXd Qm;       // T^{-1}
    MatrixXd Abar;     // T A_m T^{-1}
    VectorXd Bbar;     // T b_m
    VectorXd Lr;
    MatrixXd F;        // Abar22 - Lr Abar12
    VectorXd g_u;      // Bbar2 - Lr Bbar1
    VectorXd g_y;      // F Lr + Abar21 - Lr Abar11
    MatrixXd Theta1;   // (n-1) x (n-1)
    MatrixXd Theta2;   // (n-1) x (n-1)
    Polynomial lambda_e;
    double condition = 0.0;  // observer pole-placement conditioning
};

ObserverDesign reduced_observer_design(const StateSpace& ref, const Polynomial& lambda_e);

// Output-only parametrization of r_m: replacing x_m by its observer
// estimate turns alpha1^T x_m + alpha2 u_m into
//   beta1^T w_um + beta2^T w_ym + beta20 y_m + alpha2 u_m
// where w_um, w_ym are the a(s)/Lambda_e(s) filter banks driven by u_m, y_m.
struct RmParamYm {
    VectorXd beta1;
    VectorXd beta2;
    double beta20 = 0.0;
    double alpha2 = 0.0;
};

RmParamYm rm_param_ym(const ObserverDesign& obs, const RmParamXm& axm);

}  // namespace mrac
