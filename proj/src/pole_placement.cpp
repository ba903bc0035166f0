#include "pole_placement.hpp"

#include <Eigen/SVD>
#include <stdexcept>

#include "errors.hpp"

namespace mrac {

PlacedGain place_observer_gain(const MatrixXd& A22, const RowVectorXd& A12,
                               const Polynomial& desired) {
    const int m = static_cast<int>(A22.rows());
    if (A22.cols() != m || A12.size() != m)
        throw std::invalid_argument("place_observer_gain: dimension mismatch");
    if (desired.degree() != m || !desired.is_monic())
        throw std::invalid_argument("place_observer_gain: desired polynomial must be monic of degree dim(A22)");

    // Dual controllability matrix C = [b_d, A_d b_d, ...] for A_d = A22^T, b_d = A12^T.
    const MatrixXd Ad = A22.transpose();
    MatrixXd C(m, m);
    VectorXd v = A12.transpose();
    for (int k = 0; k < m; ++k) {
        C.col(k) = v;
        v = Ad * v;
    }

    Eigen::JacobiSVD<MatrixXd> svd(C);
    const double smin = svd.singularValues()(m - 1);
    const double smax = svd.singularValues()(0);
    if (smin <= smax * 1e-14 || smax == 0.0)
        throw assumption_error("pole placement infeasible: pair is unobservable (singular controllability matrix)");

    // Ackermann: k^T = e_m^T C^{-1} p(A_d)  =>  k = p(A_d)^T (C^T)^{-1} e_m.
    MatrixXd PA = MatrixXd::Zero(m, m);
    for (int i = desired.degree(); i >= 0; --i)
        PA = PA * Ad + desired.coeffs()[i] * MatrixXd::Identity(m, m);
    VectorXd em = VectorXd::Zero(m);
    em(m - 1) = 1.0;
    const VectorXd z = C.transpose().partialPivLu().solve(em);

    PlacedGain out;
    out.gain = PA.transpose() * z;
    out.condition = smax / smin;
    return out;
}

PlacedGain place_state_feedback(const MatrixXd& A, const VectorXd& b,
                                const Polynomial& desired) {
    // char(A + b k^T) = char(A^T + k b^T) = char(A^T - (-k) b^T).
    try {
        PlacedGain out = place_observer_gain(A.transpose(), b.transpose(), desired);
        out.gain = -out.gain;
        return out;
    } catch (const assumption_error&) {
        throw assumption_error("pole placement infeasible: pair (A, b) is uncontrollable");
    }
}

}  // namespace mrac
