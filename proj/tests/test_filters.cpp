#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "errors.hpp"
#include "filters.hpp"
#include "polynomial.hpp"
#include "rk4.hpp"
#include "transfer_function.hpp"

using namespace mrac;

TEST_CASE("first-order bank: Lambda = s+2 gives xdot = -2x + u") {
    FilterBank f = realize_filter_bank(Polynomial({2.0, 1.0}));
    REQUIRE(f.order() == 1);
    CHECK(f.A(0, 0) == doctest::Approx(-2.0));
    CHECK(f.b(0) == doctest::Approx(1.0));
    // Constant input 1: steady state is 1/Lambda(0) = 1/2.
    VectorXd ss = -f.A.partialPivLu().solve(f.b);
    CHECK(ss(0) == doctest::Approx(0.5));
}

TEST_CASE("third-order bank: Lambda = (s+2)^3, step steady state of state 0 is 1/8") {
    FilterBank f = realize_filter_bank(Polynomial({8.0, 12.0, 6.0, 1.0}));
    REQUIRE(f.order() == 3);
    VectorXd ss = -f.A.partialPivLu().solve(f.b);
    CHECK(ss(0) == doctest::Approx(1.0 / 8.0));
    // Higher states carry s^i/Lambda, whose DC gain is zero.
    CHECK(std::abs(ss(1)) < 1e-14);
    CHECK(std::abs(ss(2)) < 1e-14);
}

TEST_CASE("bank characteristic polynomial equals Lambda") {
    Polynomial lambda({6.0, 11.0, 6.0, 1.0});  // (s+1)(s+2)(s+3)
    FilterBank f = realize_filter_bank(lambda);
    Polynomial cp = char_poly(f.A);
    for (int i = 0; i <= 3; ++i)
        CHECK(std::abs(cp.coeff(i) - lambda.coeff(i)) <= 1e-10 * std::abs(lambda.coeff(0)));
}

TEST_CASE("state i realizes s^i/Lambda: frequency response check") {
    Polynomial lambda({8.0, 12.0, 6.0, 1.0});
    FilterBank f = realize_filter_bank(lambda);
    std::complex<double> s(0.0, 1.3);
    Eigen::MatrixXcd M = s * Eigen::MatrixXcd::Identity(3, 3) - f.A.cast<std::complex<double>>();
    Eigen::VectorXcd x = M.partialPivLu().solve(f.b.cast<std::complex<double>>());
    for (int i = 0; i < 3; ++i) {
        std::complex<double> expect = std::pow(s, i) / lambda.eval(s);
        CHECK(std::abs(x(i) - expect) <= 1e-12);
    }
}

TEST_CASE("impulse response of 1/(s+1)^2 matches t e^{-t}") {
    FilterBank f = realize_filter_bank(Polynomial({1.0, 2.0, 1.0}));
    // Impulse response = state-0 component of e^{At} b, integrated here.
    VectorXd x = f.b;
    Rk4Workspace ws;
    ws.resize(2);
    auto rhs = [&](double, const VectorXd& s_, VectorXd& ds) { ds = f.A * s_; };
    double t = 0.0;
    const double dt = 1e-3;
    double worst = 0.0;
    for (int k = 0; k < 5000; ++k) {
        rk4_step(rhs, t, dt, x, ws);
        t += dt;
        worst = std::max(worst, std::abs(x(0) - t * std::exp(-t)));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("parallel reference filter: channels share the companion pair") {
    VectorFilter wm = realize_wm(Polynomial({1.0, 2.0, 1.0}), 5);
    CHECK(wm.channels == 5);
    CHECK(wm.order() == 2);
    CHECK(wm.total_states() == 10);
    // Constant input 1 on a channel settles its output (state 0) at
    // 1/P_m(0) = 1.
    VectorXd ss = -wm.A.partialPivLu().solve(wm.b);
    CHECK(ss(0) == doctest::Approx(1.0));
}

TEST_CASE("invalid denominators are rejected") {
    CHECK_THROWS_AS(realize_filter_bank(Polynomial({1.0})), std::invalid_argument);
    CHECK_THROWS_AS(realize_filter_bank(Polynomial({2.0, 2.0})), std::invalid_argument);
    CHECK_THROWS_AS(realize_filter_bank(Polynomial({-2.0, 1.0})), assumption_error);
    CHECK_THROWS_AS(realize_wm(Polynomial({1.0, 1.0}), 0), std::invalid_argument);
}
