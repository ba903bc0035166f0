#include "reference_design.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "pole_placement.hpp"
#include "stability.hpp"
#include "transfer_function.hpp"

namespace mrac {

RmParamXm rm_param_xm(const StateSpace& ref, const Polynomial& pm, int n_star) {
    ref.validate();
    if (n_star < 1) throw std::invalid_argument("rm_param_xm: plant relative degree must be >= 1");
    if (pm.degree() != n_star || !pm.is_monic())
        throw std::invalid_argument("rm_param_xm: P_m must be monic of degree n* = " +
                                    std::to_string(n_star));

    const int nm_star = relative_degree_markov(ref);
    if (nm_star == 0)
        throw assumption_error("rm_param_xm: reference transfer function is identically zero");
    if (nm_star < n_star)
        throw assumption_error(
            "rm_param_xm: reference relative degree " + std::to_string(nm_star) +
            " is below the plant relative degree " + std::to_string(n_star) +
            "; the tracked signal would involve derivatives of the reference input");

    // P_m(s)[y_m] = c_m A_m^{n*} x_m + sum_i p_i c_m A_m^i x_m (+ c_m A_m^{n*-1} b_m u_m
    // when the relative degrees are equal; that Markov parameter vanishes otherwise).
    RmParamXm out;
    RowVectorXd row = ref.c;  // c_m A_m^i, starting at i = 0
    RowVectorXd acc = RowVectorXd::Zero(ref.n());
    for (int i = 0; i < n_star; ++i) {
        acc += pm.coeffs()[i] * row;
        if (i == n_star - 1 && nm_star == n_star) out.alpha2 = row * ref.b;
        row *= ref.A;
    }
    acc += row;  // the monic s^{n*} term
    out.alpha1 = acc.transpose();
    return out;
}

ObserverDesign reduced_observer_design(const StateSpace& ref, const Polynomial& lambda_e) {
    ref.validate();
    const int n = ref.n();
    if (n < 2)
        throw assumption_error("reduced_observer_design: reference order must be >= 2");
    if (lambda_e.degree() != n - 1 || !lambda_e.is_monic())
        throw std::invalid_argument("reduced_observer_design: Lambda_e must be monic of degree n-1");
    if (!is_hurwitz(lambda_e))
        throw assumption_error("reduced_observer_design: Lambda_e is not Hurwitz");
    if (ref.c.norm() == 0.0)
        throw std::invalid_argument("reduced_observer_design: output row c_m is zero");

    // Basis change T = [c_m; identity rows excluding the pivot column],
    // pivot = largest |entry| of c_m, so the first coordinate is y_m and
    // det(T) = +/- c_m[pivot] is never zero.
    int pivot = 0;
    for (int j = 1; j < n; ++j)
        if (std::abs(ref.c(j)) > std::abs(ref.c(pivot))) pivot = j;

    ObserverDesign out;
    out.T = MatrixXd::Zero(n, n);
    out.T.row(0) = ref.c;
    for (int j = 0, r = 1; j < n; ++j)
        if (j != pivot) out.T(r++, j) = 1.0;
    const Eigen::PartialPivLU<MatrixXd> tlu(out.T);
    out.Qm = tlu.inverse();
    if (!out.Qm.allFinite())
        throw assumption_error("reduced_observer_design: basis change is singular");

    out.Abar = out.T * ref.A * out.Qm;
    out.Bbar = out.T * ref.b;

    const double a11 = out.Abar(0, 0);
    const RowVectorXd a12 = out.Abar.row(0).tail(n - 1);
    const VectorXd a21 = out.Abar.col(0).tail(n - 1);
    const MatrixXd a22 = out.Abar.bottomRightCorner(n - 1, n - 1);
    const double b1 = out.Bbar(0);
    const VectorXd b2 = out.Bbar.tail(n - 1);

    PlacedGain placed = place_observer_gain(a22, a12, lambda_e);
    out.Lr = std::move(placed.gain);
    out.condition = placed.condition;

    out.F = a22 - out.Lr * a12;
    out.g_u = b2 - out.Lr * b1;
    out.g_y = out.F * out.Lr + a21 - out.Lr * a11;
    out.lambda_e = lambda_e;

    // (sI - F)^{-1} g = (sum_k N_k s^{m-k}) g / Lambda_e(s); the coefficient
    // of s^j in component i is (N_{m-j} g)(i), which is Theta(j, i).
    const ResolventExpansion rex = resolvent_expansion(out.F);
    const int m = n - 1;
    out.Theta1 = MatrixXd::Zero(m, m);
    out.Theta2 = MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) {
        out.Theta1.row(j) = (rex.N[m - j - 1] * out.g_u).transpose();
        out.Theta2.row(j) = (rex.N[m - j - 1] * out.g_y).transpose();
    }
    return out;
}

RmParamYm rm_param_ym(const ObserverDesign& obs, const RmParamXm& axm) {
    const int n = static_cast<int>(obs.T.rows());
    if (n < 2)
        throw assumption_error("rm_param_ym: reference order must be >= 2; no filter banks exist for n = 1");
    if (axm.alpha1.size() != n)
        throw std::invalid_argument("rm_param_ym: alpha1 dimension does not match the observer design");

    // alpha1^T x_m = abar^T xb with xb = T x_m; substituting the estimate
    // xb_2 = w_m + L_r y_m splits the form into filter-bank and y_m terms.
    const VectorXd abar = obs.Qm.transpose() * axm.alpha1;
    const VectorXd a0 = abar.tail(n - 1);

    RmParamYm out;
    out.beta1 = obs.Theta1 * a0;
    out.beta2 = obs.Theta2 * a0;
    out.beta20 = a0.dot(obs.Lr) + abar(0);
    out.alpha2 = axm.alpha2;
    return out;
}

}  // namespace mrac
