#include <Eigen/Dense>
#include <random>
#include <stdexcept>

#include "doctest.h"

// Throw-checking macros evaluate [[nodiscard]] calls for their exception only.
#pragma GCC diagnostic ignored "-Wunused-result"
#include "errors.hpp"
#include "pole_placement.hpp"
#include "polynomial.hpp"
#include "transfer_function.hpp"

using namespace mrac;

TEST_CASE("scalar observer gain: A22=0, A12=1, desired s+2 gives L=2") {
    MatrixXd A22 = MatrixXd::Zero(1, 1);
    RowVectorXd A12 = RowVectorXd::Constant(1, 1.0);
    PlacedGain g = place_observer_gain(A22, A12, Polynomial({2.0, 1.0}));
    REQUIRE(g.gain.size() == 1);
    CHECK(g.gain(0) == doctest::Approx(2.0));
    CHECK_FALSE(g.ill_conditioned());
}

TEST_CASE("random observer placements satisfy the characteristic polynomial") {
    std::mt19937 rng(424242u);
    std::uniform_real_distribution<double> entry(-1.5, 1.5);
    std::uniform_real_distribution<double> root(-4.0, -0.5);
    for (int trial = 0; trial < 25; ++trial) {
        int m = 2 + trial % 3;
        MatrixXd A22 = MatrixXd::NullaryExpr(m, m, [&] { return entry(rng); });
        RowVectorXd A12 = RowVectorXd::NullaryExpr(m, [&] { return entry(rng); });
        std::vector<double> roots;
        for (int i = 0; i < m; ++i) roots.push_back(root(rng));
        Polynomial desired = poly_from_roots(roots);
        PlacedGain g;
        try {
            g = place_observer_gain(A22, A12, desired);
        } catch (const assumption_error&) {
            continue;  // random pair happened to be (near-)unobservable
        }
        Polynomial achieved = char_poly(A22 - g.gain * A12);
        double scale = 0.0;
        for (int i = 0; i <= m; ++i) scale = std::max(scale, std::abs(desired.coeff(i)));
        for (int i = 0; i <= m; ++i) {
            CAPTURE(trial);
            CAPTURE(i);
            CHECK(std::abs(achieved.coeff(i) - desired.coeff(i)) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("placement is invariant to similarity scaling of the pair") {
    MatrixXd A22(2, 2);
    A22 << 0.3, -1.2, 0.7, 0.1;
    RowVectorXd A12(2);
    A12 << 1.0, 0.5;
    Polynomial desired = poly_from_roots({-2.0, -3.0});

    PlacedGain g = place_observer_gain(A22, A12, desired);

    // Diagonal similarity T: the transformed pair must yield T * gain.
    MatrixXd T(2, 2);
    T << 4.0, 0.0, 0.0, 0.25;
    MatrixXd A22t = T * A22 * T.inverse();
    RowVectorXd A12t = A12 * T.inverse();
    PlacedGain gt = place_observer_gain(A22t, A12t, desired);
    VectorXd expect = T * g.gain;
    CHECK((gt.gain - expect).cwiseAbs().maxCoeff() <= 1e-10 * expect.cwiseAbs().maxCoeff());
}

TEST_CASE("unobservable pair is rejected") {
    MatrixXd A22 = MatrixXd::Zero(2, 2);
    A22(0, 0) = -1.0;
    A22(1, 1) = -2.0;
    RowVectorXd A12(2);
    A12 << 1.0, 0.0;  // second mode invisible
    CHECK_THROWS_AS(place_observer_gain(A22, A12, poly_from_roots({-1.0, -2.0})),
                    assumption_error);
}

TEST_CASE("malformed desired polynomial is rejected") {
    MatrixXd A22 = MatrixXd::Zero(2, 2);
    RowVectorXd A12 = RowVectorXd::Constant(2, 1.0);
    A12(1) = 0.5;
    CHECK_THROWS_AS(place_observer_gain(A22, A12, Polynomial({2.0, 1.0})),
                    std::invalid_argument);  // degree 1 != 2
    CHECK_THROWS_AS(place_observer_gain(A22, A12, Polynomial({4.0, 4.0, 2.0})),
                    std::invalid_argument);  // not monic
}

TEST_CASE("state feedback places char(A + b k^T)") {
    MatrixXd A(3, 3);
    A << 0.0, 1.0, 0.0,
         0.0, 0.0, 1.0,
         1.0, -2.0, 0.5;
    VectorXd b(3);
    b << 0.0, 0.0, 1.0;
    Polynomial desired = poly_from_roots({-1.0, -2.0, -5.0});
    PlacedGain k = place_state_feedback(A, b, desired);
    Polynomial achieved = char_poly(A + b * k.gain.transpose());
    for (int i = 0; i <= 3; ++i)
        CHECK(achieved.coeff(i) == doctest::Approx(desired.coeff(i)).epsilon(1e-9));

    VectorXd b_bad = VectorXd::Zero(3);
    CHECK_THROWS_AS(place_state_feedback(A, b_bad, desired), assumption_error);
}
