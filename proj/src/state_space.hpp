#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace mrac {

using Eigen::MatrixXd;
using Eigen::RowVectorXd;
using Eigen::VectorXd;

// SISO state-space triple: x' = A x + b u, y = c x.
struct StateSpace {
    MatrixXd A;
    VectorXd b;
    RowVectorXd c;

    [[nodiscard]] int n() const { return static_cast<int>(A.rows()); }

    void validate() const {
        if (A.rows() < 1 || A.rows() != A.cols())
            throw std::invalid_argument("state space: A must be square, n >= 1");
        if (b.size() != A.rows() || c.size() != A.rows())
            throw std::invalid_argument("state space: b/c dimensions must match A");
        if (!A.allFinite() || !b.allFinite() || !c.allFinite())
            throw std::invalid_argument("state space: non-finite entry");
    }
};

}  // namespace mrac
