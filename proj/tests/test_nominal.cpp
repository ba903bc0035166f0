#include <Eigen/Dense>
#include <stdexcept>

#include "doctest.h"

// Throw-checking macros evaluate [[nodiscard]] calls for their exception only.
#pragma GCC diagnostic ignored "-Wunused-result"
#include "errors.hpp"
#include "matching.hpp"
#include "nominal.hpp"
#include "polynomial.hpp"
#include "reference_design.hpp"
#include "state_space.hpp"
#include "transfer_function.hpp"

using namespace mrac;

namespace {

StateSpace aircraft() {
    StateSpace sys;
    sys.A.resize(4, 4);
    sys.A << -0.026373, 0.12687, -12.926, -32.169,
             -0.25009, -0.80174, 220.55, -0.16307,
              0.000171, -0.00754, -0.551, -0.000334,
              0.0, 0.0, 1.0, 0.0;
    sys.b.resize(4);
    sys.b << 0.010887, -0.18577, -0.022966, 0.0;
    sys.c.resize(4);
    sys.c << 0.0, 0.0, 0.0, 1.0;
    return sys;
}

RationalTF rounded_aircraft_tf() {
    RationalTF tf;
    tf.kp = -0.023;
    tf.Z = Polynomial({-0.0012 / -0.023, -0.0176 / -0.023, 1.0});
    tf.P = Polynomial({0.0651, 0.0989, 2.1744, 1.3791, 1.0});
    return tf;
}

}  // namespace

TEST_CASE("scheme names round-trip and parsing is case-insensitive") {
    CHECK(parse_scheme("SFB_XM") == Scheme::SfbXm);
    CHECK(parse_scheme("sfb_ym") == Scheme::SfbYm);
    CHECK(parse_scheme("Ofb_Xm") == Scheme::OfbXm);
    CHECK(parse_scheme("OFB_YM") == Scheme::OfbYm);
    for (Scheme s : {Scheme::SfbXm, Scheme::SfbYm, Scheme::OfbXm, Scheme::OfbYm})
        CHECK(parse_scheme(scheme_name(s)) == s);
    CHECK_THROWS_AS(parse_scheme("SFB"), parse_error);
    CHECK_THROWS_AS(parse_scheme(""), parse_error);
}

TEST_CASE("regressor dimensions for n = 4 are 9, 12, 12, 15") {
    CHECK(regressor_dim(Scheme::SfbXm, 4) == 9);
    CHECK(regressor_dim(Scheme::SfbYm, 4) == 12);
    CHECK(regressor_dim(Scheme::OfbXm, 4) == 12);
    CHECK(regressor_dim(Scheme::OfbYm, 4) == 15);
    CHECK(regressor_dim(Scheme::SfbXm, 1) == 3);
}

TEST_CASE("scalar state-feedback assembly gives theta* = [-1, 0, 1]") {
    // Integrator plant, reference A=-1,b=1,c=1, P_m = s+1.
    StateSpace plant;
    plant.A = MatrixXd::Zero(1, 1);
    plant.b = VectorXd::Constant(1, 1.0);
    plant.c = RowVectorXd::Constant(1, 1.0);
    StateFbMatch sfb = solve_state_matching(plant, Polynomial({1.0, 1.0}));

    StateSpace ref;
    ref.A = MatrixXd::Constant(1, 1, -1.0);
    ref.b = VectorXd::Constant(1, 1.0);
    ref.c = RowVectorXd::Constant(1, 1.0);
    RmParamXm axm = rm_param_xm(ref, Polynomial({1.0, 1.0}), 1);
    // alpha1 = c A + p0 c = -1 + 1 = 0, alpha2 = c b = 1.

    NominalDesign nom = assemble_nominal(Scheme::SfbXm, nullptr, &sfb, &axm, nullptr);
    REQUIRE(nom.theta_star.size() == 3);
    CHECK(nom.theta_star(0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(nom.theta_star(1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(nom.theta_star(2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(nom.rho_star == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("aircraft OFB_YM assembly reproduces the published 15-vector") {
    StateSpace ref = aircraft();
    const Polynomial pm({1.0, 2.0, 1.0});
    const Polynomial lam({8.0, 12.0, 6.0, 1.0});

    OutputFbMatch ofb = solve_output_matching(rounded_aircraft_tf(), lam, pm);
    RmParamXm axm = rm_param_xm(ref, pm, 2);
    ObserverDesign obs = reduced_observer_design(ref, lam);
    RmParamYm aym = rm_param_ym(obs, axm);
    NominalDesign nom = assemble_nominal(Scheme::OfbYm, &ofb, nullptr, &axm, &aym);

    const double expect[15] = {7.654562, 6.881398, -1.386117, -4434.189351, -5958.822119,
                               -2550.603134, 595.409427, -7.654459, -6.860858, 1.385877,
                               4434.169641, 5958.808248, 2550.582910, -595.408430, 0.998522};
    REQUIRE(nom.theta_star.size() == 15);
    for (int i = 0; i < 15; ++i) {
        CAPTURE(i);
        CHECK(nom.theta_star(i) == doctest::Approx(expect[i]).epsilon(1e-3));
    }
    // Self-consistency: the last entry is theta3 * alpha2 from the solver's
    // own values, independent of any published rounding.
    CHECK(nom.theta_star(14) == doctest::Approx(ofb.theta3 * aym.alpha2).epsilon(1e-10));
    CHECK(nom.rho_star == doctest::Approx(1.0 / ofb.theta3).epsilon(1e-12));
}

TEST_CASE("assembled dimensions match regressor_dim for all four schemes") {
    StateSpace plant = aircraft();
    StateSpace ref = aircraft();
    const Polynomial pm({1.0, 2.0, 1.0});
    const Polynomial lam({8.0, 12.0, 6.0, 1.0});

    RationalTF tf = tf_from_ss(plant);
    OutputFbMatch ofb = solve_output_matching(tf, lam, pm);
    StateFbMatch sfb = solve_state_matching(plant, pm);
    RmParamXm axm = rm_param_xm(ref, pm, 2);
    ObserverDesign obs = reduced_observer_design(ref, lam);
    RmParamYm aym = rm_param_ym(obs, axm);

    auto dim = [&](Scheme s, const NominalDesign& d) {
        CHECK(d.theta_star.size() == regressor_dim(s, 4));
    };
    dim(Scheme::SfbXm, assemble_nominal(Scheme::SfbXm, nullptr, &sfb, &axm, nullptr));
    dim(Scheme::SfbYm, assemble_nominal(Scheme::SfbYm, nullptr, &sfb, nullptr, &aym));
    dim(Scheme::OfbXm, assemble_nominal(Scheme::OfbXm, &ofb, nullptr, &axm, nullptr));
    dim(Scheme::OfbYm, assemble_nominal(Scheme::OfbYm, &ofb, nullptr, &axm, &aym));

    // rho* convention: 1/k2 for state feedback, 1/theta3 (= kp) for output.
    NominalDesign s1 = assemble_nominal(Scheme::SfbXm, nullptr, &sfb, &axm, nullptr);
    NominalDesign o1 = assemble_nominal(Scheme::OfbXm, &ofb, nullptr, &axm, nullptr);
    CHECK(s1.rho_star == doctest::Approx(1.0 / sfb.k2).epsilon(1e-12));
    CHECK(o1.rho_star == doctest::Approx(tf.kp).epsilon(1e-9));
}

TEST_CASE("missing components are named") {
    StateSpace plant = aircraft();
    const Polynomial pm({1.0, 2.0, 1.0});
    StateFbMatch sfb = solve_state_matching(plant, pm);
    RmParamXm axm = rm_param_xm(plant, pm, 2);
    CHECK_THROWS_WITH_AS(assemble_nominal(Scheme::SfbXm, nullptr, nullptr, &axm, nullptr),
                         doctest::Contains("state-feedback matching"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(assemble_nominal(Scheme::SfbXm, nullptr, &sfb, nullptr, nullptr),
                         doctest::Contains("reference-state tracking"), std::invalid_argument);
}
