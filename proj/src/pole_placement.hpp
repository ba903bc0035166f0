#pragma once

#include "polynomial.hpp"
#include "state_space.hpp"

namespace mrac {

struct PlacedGain {
    VectorXd gain;
    double condition = 0.0;  // of the (dual) controllability matrix
    [[nodiscard]] bool ill_conditioned() const { return condition > 1e12; }
};

// Gain L with char-poly(A22 - L * A12) = desired (monic, deg = dim A22).
// Ackermann's formula on the dual pair (A22^T, A12^T) with a
// partial-pivot solve; the controllability-matrix condition number is
// reported so callers can surface a warning above 1e12.
// Throws assumption_error when (A12, A22) is unobservable.
[[nodiscard]] PlacedGain place_observer_gain(const MatrixXd& A22, const RowVectorXd& A12,
                                             const Polynomial& desired);

// Gain k with char-poly(A + b * k^T) = desired; dual of the above.
// Throws assumption_error when (A, b) is uncontrollable.
[[nodiscard]] PlacedGain place_state_feedback(const MatrixXd& A, const VectorXd& b,
                                              const Polynomial& desired);

}  // namespace mrac
