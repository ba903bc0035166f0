#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"

// Throw-checking macros evaluate [[nodiscard]] calls for their exception only.
#pragma GCC diagnostic ignored "-Wunused-result"
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

}  // namespace

TEST_CASE("scalar system (A=-1,b=1,c=1) gives 1/(s+1)") {
    StateSpace sys;
    sys.A = MatrixXd::Constant(1, 1, -1.0);
    sys.b = VectorXd::Constant(1, 1.0);
    sys.c = RowVectorXd::Constant(1, 1.0);
    RationalTF tf = tf_from_ss(sys);
    CHECK(tf.kp == doctest::Approx(1.0));
    CHECK(tf.Z.degree() == 0);
    CHECK(tf.Z.coeff(0) == doctest::Approx(1.0));
    CHECK(tf.P.coeff(0) == doctest::Approx(1.0));
    CHECK(tf.P.coeff(1) == doctest::Approx(1.0));
    CHECK(relative_degree(tf) == 1);
    CHECK(relative_degree_markov(sys) == 1);
}

TEST_CASE("aircraft model transfer function matches its published rounding") {
    RationalTF tf = tf_from_ss(aircraft());
    CHECK(relative_degree(tf) == 2);
    CHECK(relative_degree_markov(aircraft()) == 2);

    CHECK(tf.kp == doctest::Approx(-0.023).epsilon(1e-3));
    // Denominator, ascending; published values are 3-5 significant figures
    // (two of them carry known misprints, corrected here: 0.0989, -0.0012).
    CHECK(tf.P.coeff(4) == doctest::Approx(1.0));
    CHECK(tf.P.coeff(3) == doctest::Approx(1.3791).epsilon(1e-3));
    CHECK(tf.P.coeff(2) == doctest::Approx(2.1744).epsilon(1e-3));
    CHECK(tf.P.coeff(1) == doctest::Approx(0.0989).epsilon(1e-3));
    CHECK(tf.P.coeff(0) == doctest::Approx(0.0651).epsilon(1e-3));
    // kp * Z gives the raw numerator; the constant term is printed to only
    // two significant figures, hence the looser tolerance there.
    CHECK(tf.kp * tf.Z.coeff(2) == doctest::Approx(-0.023).epsilon(1e-3));
    CHECK(tf.kp * tf.Z.coeff(1) == doctest::Approx(-0.0176).epsilon(1e-3));
    CHECK(tf.kp * tf.Z.coeff(0) == doctest::Approx(-0.0012).epsilon(5e-2));
    CHECK(tf.Z.is_monic());
    CHECK(tf.P.is_monic());
}

TEST_CASE("random stable systems: tf matches the direct resolvent at 20 frequencies") {
    std::mt19937 rng(555u);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        StateSpace sys;
        sys.A = MatrixXd::NullaryExpr(3, 3, [&] { return entry(rng); });
        sys.A -= 3.0 * MatrixXd::Identity(3, 3);  // push the spectrum left
        sys.b = VectorXd::NullaryExpr(3, [&] { return entry(rng); });
        sys.c = RowVectorXd::NullaryExpr(3, [&] { return entry(rng); });
        RationalTF tf;
        try {
            tf = tf_from_ss(sys);
        } catch (const std::invalid_argument&) {
            continue;  // degenerate draw
        }
        for (int k = 0; k < 20; ++k) {
            double w = std::pow(10.0, -1.0 + 2.0 * k / 19.0);
            std::complex<double> s(0.0, w);
            std::complex<double> direct = resolvent_response(sys, s);
            std::complex<double> via_tf = tf.eval(s);
            CAPTURE(trial);
            CAPTURE(w);
            CHECK(std::abs(direct - via_tf) <= 1e-8 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("zero transfer function is rejected") {
    StateSpace sys;
    sys.A = MatrixXd::Zero(2, 2);
    sys.A(0, 1) = 1.0;
    sys.b = VectorXd::Zero(2);
    sys.b(1) = 1.0;
    sys.c = RowVectorXd::Zero(2);  // c = 0 so c(sI-A)^{-1}b == 0
    CHECK_THROWS_AS(tf_from_ss(sys), std::invalid_argument);
    CHECK(relative_degree_markov(sys) == 0);
}

TEST_CASE("relative degree of simple forms") {
    RationalTF integ;  // 1/s
    integ.kp = 1.0;
    integ.Z = Polynomial({1.0});
    integ.P = Polynomial({0.0, 1.0});
    CHECK(relative_degree(integ) == 1);

    RationalTF second;  // 1/(s+1)^2
    second.kp = 1.0;
    second.Z = Polynomial({1.0});
    second.P = Polynomial({1.0, 2.0, 1.0});
    CHECK(relative_degree(second) == 2);
}

TEST_CASE("resolvent expansion reconstructs (sI-A)^{-1} at sample points") {
    std::mt19937 rng(909u);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    MatrixXd A = MatrixXd::NullaryExpr(4, 4, [&] { return entry(rng); });
    ResolventExpansion rex = resolvent_expansion(A);
    REQUIRE(rex.N.size() == 4);
    CHECK(rex.den.is_monic());
    for (double sval : {2.5, -3.0, 7.0}) {
        MatrixXd M = sval * MatrixXd::Identity(4, 4) - A;
        MatrixXd direct = M.partialPivLu().solve(MatrixXd::Identity(4, 4));
        MatrixXd numer = MatrixXd::Zero(4, 4);
        for (int k = 1; k <= 4; ++k) numer += rex.N[static_cast<size_t>(k - 1)] * std::pow(sval, 4 - k);
        MatrixXd recon = numer / rex.den.eval(sval);
        CHECK((recon - direct).cwiseAbs().maxCoeff() <= 1e-8 * direct.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("char_poly matches hand expansion on a 2x2") {
    MatrixXd A(2, 2);
    A << 0.0, 1.0, -2.0, -3.0;  // char = s^2 + 3s + 2
    Polynomial p = char_poly(A);
    CHECK(p.coeff(0) == doctest::Approx(2.0));
    CHECK(p.coeff(1) == doctest::Approx(3.0));
    CHECK(p.coeff(2) == doctest::Approx(1.0));
}

TEST_CASE("near_cancellations flags a constructed common factor") {
    RationalTF tf;
    tf.kp = 1.0;
    tf.Z = Polynomial({1.0, 1.0});                          // s + 1
    tf.P = Polynomial({1.0, 1.0}) * Polynomial({2.0, 1.0});  // (s+1)(s+2)
    auto pairs = near_cancellations(tf, 1e-6);
    REQUIRE(pairs.size() == 1);
    CHECK(std::abs(pairs[0].first - std::complex<double>(-1.0, 0.0)) < 1e-6);

    RationalTF clean;
    clean.kp = 1.0;
    clean.Z = Polynomial({1.0, 1.0});
    clean.P = Polynomial({2.0, 1.0});
    CHECK(near_cancellations(clean, 1e-6).empty());
}

TEST_CASE("poly_roots finds the roots of (s+2)^2 (s+5)") {
    Polynomial p = poly_from_roots({-2.0, -2.0, -5.0});
    auto roots = poly_roots(p);
    REQUIRE(roots.size() == 3);
    int near2 = 0, near5 = 0;
    for (auto r : roots) {
        if (std::abs(r - std::complex<double>(-2.0, 0.0)) < 1e-4) ++near2;
        if (std::abs(r - std::complex<double>(-5.0, 0.0)) < 1e-6) ++near5;
    }
    CHECK(near2 == 2);
    CHECK(near5 == 1);
}
