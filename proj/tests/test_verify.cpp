#include <string>

#include "doctest.h"

// Throw-checking macros evaluate [[nodiscard]] calls for their exception only.
#pragma GCC diagnostic ignored "-Wunused-result"

#include "errors.hpp"
#include "scenario_io.hpp"
#include "simulate.hpp"
#include "verify.hpp"

using namespace mrac;

namespace {

Scenario aircraft_scenario() {
    return load_scenario(std::string(MRAC_SCENARIO_DIR) + "/aircraft_const.scn");
}

const VerifyCheck* find_check(const VerifyReport& rep, const std::string& name) {
    for (const VerifyCheck& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

// Second-order plant in controllable canonical form with numerator num.
Scenario second_order(const std::vector<double>& num, const std::vector<double>& pm,
                      const RowVectorXd& cm) {
    Scenario scn;
    scn.name = "synthetic";
    scn.plant.A.resize(2, 2);
    scn.plant.A << 0, 1, -2, -3;
    scn.plant.b.resize(2);
    scn.plant.b << 0, 1;
    scn.plant.c.resize(2);
    for (int i = 0; i < 2; ++i) scn.plant.c(i) = i < static_cast<int>(num.size()) ? num[i] : 0.0;
    scn.ref_sys.A = scn.plant.A;
    scn.ref_sys.b = scn.plant.b;
    scn.ref_sys.c = cm;
    scn.k1m = VectorXd::Zero(2);
    scn.input.kind = RefInputSpec::Kind::Constant;
    scn.input.constant = 1.0;
    scn.scheme = Scheme::SfbXm;
    scn.P_m = Polynomial(pm);
    scn.gamma_theta = 0.0;
    scn.gamma_rho = 0.0;
    scn.sign_kp = 1.0;
    scn.theta0_is_scale = true;
    scn.theta0_scale = 1.0;
    scn.rho0_is_scale = true;
    scn.rho0_scale = 1.0;
    scn.horizon = 1.0;
    scn.dt = 1e-3;
    return scn;
}

}  // namespace

TEST_CASE("aircraft output-feedback design passes every check") {
    const Wiring w = make_wiring(aircraft_scenario());
    const VerifyReport rep = verify_design(w);
    CHECK(rep.all_pass());
    REQUIRE(rep.checks.size() == 12);

    for (const char* name :
         {"minimum_phase", "kp_sign_declared", "reference_stable", "relative_degree_order",
          "pm_stable_monic", "lambda_stable_monic", "lambda_e_stable_monic",
          "output_matching_residual", "observer_charpoly_residual",
          "observer_um_frequency_residual", "observer_ym_frequency_residual",
          "theta_star_reassembly"}) {
        CAPTURE(name);
        const VerifyCheck* c = find_check(rep, name);
        REQUIRE(c != nullptr);
        CHECK(c->pass);
    }
    const VerifyCheck* res = find_check(rep, "output_matching_residual");
    CHECK(res->numeric);
    CHECK(res->value < res->threshold);

    const std::string text = rep.str();
    CHECK(text.find("PASS minimum_phase") != std::string::npos);
    CHECK(text.find("value=") != std::string::npos);
    CHECK(text.find("RESULT: PASS (12/12 checks)") != std::string::npos);
}

TEST_CASE("state-feedback scheme reports the matching checks it actually uses") {
    Scenario scn = aircraft_scenario();
    scn.scheme = Scheme::SfbXm;
    const Wiring w = make_wiring(scn);
    const VerifyReport rep = verify_design(w);
    CHECK(rep.all_pass());
    CHECK(find_check(rep, "state_matching_residual") != nullptr);
    CHECK(find_check(rep, "output_matching_residual") == nullptr);
    CHECK(find_check(rep, "lambda_stable_monic") == nullptr);
    CHECK(find_check(rep, "observer_charpoly_residual") == nullptr);
}

TEST_CASE("tampered matching gains are caught by the residual check") {
    Wiring w = make_wiring(aircraft_scenario());
    w.ofb->theta1(0) *= 1.01;
    const VerifyReport rep = verify_design(w);
    CHECK_FALSE(rep.all_pass());
    const VerifyCheck* c = find_check(rep, "output_matching_residual");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    CHECK(c->value > c->threshold);
    CHECK(rep.str().find("FAIL output_matching_residual") != std::string::npos);
    CHECK(rep.str().find("RESULT: FAIL") != std::string::npos);
}

TEST_CASE("tampered assembled parameters are caught by reassembly") {
    Wiring w = make_wiring(aircraft_scenario());
    w.nominal.theta_star(3) += 1e-6;
    const VerifyReport rep = verify_design(w);
    const VerifyCheck* c = find_check(rep, "theta_star_reassembly");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    // Only the reassembly check depends on the stored vector.
    CHECK(find_check(rep, "output_matching_residual")->pass);
}

TEST_CASE("declared gain sign is checked against the plant") {
    Wiring w = make_wiring(aircraft_scenario());
    w.scn.sign_kp = 1.0;  // the aircraft elevator gain is negative
    const VerifyReport rep = verify_design(w);
    const VerifyCheck* c = find_check(rep, "kp_sign_declared");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    CHECK(c->note.find("contradicts") != std::string::npos);
}

TEST_CASE("design rejects a plant with an unstable zero") {
    const Scenario scn = second_order({-1.0, 1.0}, {2.0, 1.0}, RowVectorXd{{1.0, 0.0}});
    CHECK_THROWS_WITH_AS(make_wiring(scn), doctest::Contains("not minimum phase"),
                         assumption_error);
}

TEST_CASE("design rejects a reference faster than the plant allows") {
    // Plant relative degree 2, reference relative degree 1.
    const Scenario scn = second_order({1.0}, {1.0, 2.0, 1.0}, RowVectorXd{{1.0, 1.0}});
    CHECK_THROWS_WITH_AS(make_wiring(scn), doctest::Contains("below the plant relative degree"),
                         assumption_error);
}

TEST_CASE("near pole-zero cancellations surface as warnings, not failures") {
    const Scenario scn =
        second_order({1.0 + 1e-7, 1.0}, {2.0, 1.0}, RowVectorXd{{1.0, 0.0}});
    const Wiring w = make_wiring(scn);
    const VerifyReport rep = verify_design(w);
    CHECK(rep.all_pass());
    REQUIRE_FALSE(rep.warnings.empty());
    CHECK(rep.warnings.front().find("near pole-zero cancellation") != std::string::npos);
    CHECK(rep.str().find("warning:") != std::string::npos);
}
