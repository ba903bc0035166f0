#pragma once

#include "polynomial.hpp"
#include "state_space.hpp"

namespace mrac {

// Companion realization of the bank a(s)/L(s) with a(s) = [1, s, ..., s^{m-1}]^T:
// state i carries s^i/L(s) applied to the input, so the full state vector is the
// bank output and no separate output map is needed.
struct FilterBank {
    MatrixXd A;
    VectorXd b;
    int order() const { return static_cast<int>(A.rows()); }
};

// q parallel SISO copies of W(s) = 1/P(s), each of state dimension deg(P).
// Channel output is state 0 of that channel's companion realization.
struct VectorFilter {
    MatrixXd A;
    VectorXd b;
    int channels = 0;
    int order() const { return static_cast<int>(A.rows()); }
    int total_states() const { return channels * order(); }
};

FilterBank realize_filter_bank(const Polynomial& lambda);
VectorFilter realize_wm(const Polynomial& pm, int q);

}  // namespace mrac
