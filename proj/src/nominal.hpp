#pragma once

#include <string>

#include "matching.hpp"
#include "reference_design.hpp"

namespace mrac {

// The four controller structures. SFB/OFB: full-state vs output feedback
// of the plant; XM/YM: reference tracked through its state x_m vs through
// (u_m, y_m) only.
enum class Scheme { SfbXm, SfbYm, OfbXm, OfbYm };

[[nodiscard]] const char* scheme_name(Scheme s);

// Accepts the canonical names SFB_XM, SFB_YM, OFB_XM, OFB_YM
// (case-insensitive). Throws parse_error otherwise.
[[nodiscard]] Scheme parse_scheme(const std::string& name);

// Regressor length p for plant order n: 2n+1, 3n, 3n, 4n-1.
[[nodiscard]] int regressor_dim(Scheme s, int n);

// Matched parameter vector, laid out to pair with the scheme's regressor:
//   SFB_XM: theta = [k1; k2 a1; k2 a2]                 w = [x; x_m; u_m]
//   SFB_YM: theta = [k1; k2 b1; k2 b2; k2 b20; k2 a2]  w = [x; w_um; w_ym; y_m; u_m]
//   OFB_XM: theta = [t1; t2; t20; t3 a1; t3 a2]        w = [w1; w2; y; x_m; u_m]
//   OFB_YM: theta = [t1; t2; t20; t3 b1; t3 b2; t3 b20; t3 a2]
//                                                      w = [w1; w2; y; w_um; w_ym; y_m; u_m]
// rho_star = 1/k2 for state feedback, kp for output feedback.
struct NominalDesign {
    Scheme scheme = Scheme::SfbXm;
    VectorXd theta_star;
    double rho_star = 0.0;
};

// Pass null for components a scheme does not use; a missing required
// component raises an error naming it.
NominalDesign assemble_nominal(Scheme scheme, const OutputFbMatch* ofb, const StateFbMatch* sfb,
                               const RmParamXm* axm, const RmParamYm* aym);

}  // namespace mrac
