#pragma once

#include "polynomial.hpp"
#include "state_space.hpp"
#include "transfer_function.hpp"

namespace mrac {

// Output-feedback matched parameters: with u = theta1^T a(s)/L(s)[u]
// + theta2^T a(s)/L(s)[y] + theta20 y + theta3 r, the closed loop over
// G = kp Z/P equals 1/P_m. theta3 = 1/kp always; the rest solve
//   theta1^T a(s) P(s) + (theta2^T a(s) + theta20 L(s)) kp Z(s)
//     = L(s) (P(s) - Z(s) P_m(s)).
struct OutputFbMatch {
    VectorXd theta1;
    VectorXd theta2;
    double theta20 = 0.0;
    double theta3 = 0.0;
};

// State-feedback matched parameters: c (sI - A - b k1^T)^{-1} b k2 = 1/P_m.
struct StateFbMatch {
    VectorXd k1;
    double k2 = 0.0;
    double condition = 0.0;  // of the pole-placement controllability matrix
};

OutputFbMatch solve_output_matching(const RationalTF& G, const Polynomial& lambda,
                                    const Polynomial& pm);

StateFbMatch solve_state_matching(const StateSpace& sys, const Polynomial& pm);

// Coefficient-wise residual of the output matching identity, relative to the
// largest coefficient magnitude across both sides. Verification/test hook.
[[nodiscard]] double output_matching_residual(const RationalTF& G, const Polynomial& lambda,
                                              const Polynomial& pm, const OutputFbMatch& m);

// Frequency-sampled residual max_w |H(jw) - 1/P_m(jw)| / |1/P_m(jw)| of the
// closed loop H under k1, k2, over 20 log-spaced frequencies in [1e-2, 1e2].
[[nodiscard]] double state_matching_residual(const StateSpace& sys, const Polynomial& pm,
                                             const StateFbMatch& m);

}  // namespace mrac
