#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adaptive.hpp"
#include "nominal.hpp"
#include "polynomial.hpp"
#include "state_space.hpp"

namespace mrac {

// Exogenous reference-model input v_m(t): a constant or a sum of sines
// sum_i a_i sin(w_i t).
struct RefInputSpec {
    enum class Kind { Constant, Sines };
    Kind kind = Kind::Constant;
    double constant = 0.0;
    std::vector<std::pair<double, double>> sines;  // (amplitude, angular frequency)
};

[[nodiscard]] double ref_input(const RefInputSpec& spec, double t);

// One simulation case: plant, reference system with stabilizing gain k1m
// and input v_m, design polynomial choices, adaptation gains, initial
// parameter estimates, and integration settings.
//
// Lambda is needed only by output-feedback schemes and Lambda_e only by
// y_m-based schemes; both may be present regardless (a scheme override on
// the command line may switch which ones are used).
struct Scenario {
    StateSpace plant;
    StateSpace ref_sys;
    VectorXd k1m;
    RefInputSpec input;

    Scheme scheme = Scheme::SfbXm;
    Polynomial P_m;
    Polynomial Lambda;
    Polynomial Lambda_e;
    bool has_lambda = false;
    bool has_lambda_e = false;

    double gamma_theta = 0.0;  // Gamma = gamma_theta * I_p
    double gamma_rho = 0.0;
    double sign_kp = 1.0;

    // theta(0)/rho(0): either an explicit value or a multiple of the
    // matched parameters (resolved once the design is computed).
    bool theta0_is_scale = true;
    double theta0_scale = 1.0;
    VectorXd theta0;
    bool rho0_is_scale = true;
    double rho0_scale = 1.0;
    double rho0 = 0.0;

    VectorXd x0;   // empty = zero
    VectorXd xm0;  // empty = zero

    double horizon = 200.0;
    double dt = 1e-3;

    std::string name;  // output stem, defaults to the scenario file stem

    // Structural and feasibility checks that do not need the full design:
    // dimensions, design polynomial degrees and stability, both-or-neither
    // adaptation gains, the closed-loop reference stability surrogate, and
    // the relative-degree order n_m* >= n*. Throws assumption_error (or
    // std::invalid_argument for plain dimension mismatches).
    void validate() const;

    // Plant relative degree, shared by validation and design.
    [[nodiscard]] int n_star() const;

    // Reference closed-loop matrix A_m + b_m k1m^T (the system that v_m drives).
    [[nodiscard]] MatrixXd ref_closed_loop() const;
};

}  // namespace mrac
