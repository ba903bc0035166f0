#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adaptive.hpp"
#include "filters.hpp"
#include "matching.hpp"
#include "nominal.hpp"
#include "reference_design.hpp"
#include "scenario.hpp"
#include "transfer_function.hpp"

namespace mrac {

// Offsets of each block inside the flat ODE state vector:
//   [ x | x_m | fb_u | fb_y | fb_um | fb_ym | zeta | xi | theta | rho ]
// fb_u/fb_y exist only for output-feedback schemes, fb_um/fb_ym only for
// y_m-based schemes (length 0 otherwise). zeta stores the p W_m channels
// column-contiguously (q states per channel); xi is the W_m[theta^T omega]
// channel.
struct StateLayout {
    int n = 0;                // plant/reference order
    int nf = 0;               // filter bank length n-1
    int q = 0;                // deg P_m = n*
    int p = 0;                // regressor length
    int len_plant_banks = 0;  // nf for OFB schemes, else 0
    int len_ref_banks = 0;    // nf for YM schemes, else 0
    int off_x = 0, off_xm = 0;
    int off_fb_u = 0, off_fb_y = 0, off_fb_um = 0, off_fb_ym = 0;
    int off_zeta = 0, off_xi = 0, off_theta = 0, off_rho = 0;
    int total = 0;
};

// Everything derived once from a scenario before integration: the plant
// transfer function, the matched design, adaptation gains, filter
// realizations, state layout, resolved initial estimates, and the
// reference-signal envelope used by the boundedness flag.
struct Wiring {
    Scenario scn;
    RationalTF tf;
    int n = 0;
    int n_star = 0;
    int p = 0;
    StateLayout layout;

    std::optional<StateFbMatch> sfb;
    std::optional<OutputFbMatch> ofb;
    std::optional<RmParamXm> axm;
    std::optional<ObserverDesign> obs;
    std::optional<RmParamYm> aym;
    NominalDesign nominal;
    Gains gains;

    FilterBank plant_bank;  // companion of Lambda, when len_plant_banks > 0
    FilterBank ref_bank;    // companion of Lambda_e, when len_ref_banks > 0
    VectorFilter wm;        // p channels of 1/P_m

    VectorXd theta0;
    double rho0 = 0.0;
    double xm_envelope = 0.0;  // steady-state bound on ||x_m|| from v_m
};

// Validates the scenario, runs the full design chain, and assembles the
// simulation wiring. Throws assumption_error on any violated modeling or
// feasibility condition.
[[nodiscard]] Wiring make_wiring(const Scenario& scn);

// Signals observed at the sample point, filled by closed_loop_rhs.
struct RhsObservables {
    double y = 0.0, y_m = 0.0, e = 0.0, u = 0.0, u_m = 0.0, eps_over_m = 0.0;
};

// Preallocated scratch for one derivative evaluation.
struct SimWorkspace {
    ControllerState cs;
    VectorXd x_buf, xm_buf, omega, zeta_out;
    RhsObservables obs;
    void resize(const StateLayout& layout);
};

// Derivative of the coupled closed loop, evaluated in the order
// v_m -> u_m -> outputs -> regressor -> u -> dynamics -> adaptation.
void closed_loop_rhs(const Wiring& w, double t, const VectorXd& s, VectorXd& ds,
                     SimWorkspace& ws);

// Flat initial state: x0/xm0 (zero when not given), zero filter states,
// theta0 and rho0 resolved against the matched parameters.
[[nodiscard]] VectorXd initial_state(const Wiring& w);

// Uniformly sampled run history, one entry per integrator step (stride
// applies only at CSV export). A diverged run carries the samples up to
// the failure and is flagged.
struct Trace {
    std::vector<double> t, y, y_m, e, u, u_m, theta_norm, rho, eps_over_m, V;
    bool diverged = false;
    double divergence_time = 0.0;
    double max_xm_norm = 0.0;
    double xm_envelope = 0.0;
    double dt = 0.0;
    double horizon = 0.0;
    std::string scheme;
    [[nodiscard]] size_t size() const { return t.size(); }
    [[nodiscard]] bool xm_bounded() const {
        return max_xm_norm <= 10.0 * std::max(xm_envelope, 1e-9);
    }
};

[[nodiscard]] Trace integrate(const Wiring& w);
[[nodiscard]] Trace integrate(const Scenario& scn);

struct Metrics {
    double tail_rms_e = 0.0;     // RMS of e over the last 20% of the run
    double max_abs_e = 0.0;
    double V_violation_max = 0.0;  // max over steps of (V_{k+1} - V_k)+
    double L2_integral = 0.0;      // trapezoid integral of (eps/m)^2
    bool xm_bounded = true;
    bool finite = true;            // false when the run diverged
};

[[nodiscard]] Metrics metrics(const Trace& tr);
[[nodiscard]] std::string metrics_line(const Metrics& m);

// CSV export: header t,y,y_m,e,u,u_m,theta_norm,rho,eps_over_m,V then one
// row per sample at 17 significant digits, keeping every stride-th sample
// plus the final one. Throws std::runtime_error on I/O failure.
void write_csv(const Trace& tr, const std::string& path, int stride);

}  // namespace mrac
