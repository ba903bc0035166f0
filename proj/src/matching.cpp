#include "matching.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "errors.hpp"
#include "pole_placement.hpp"
#include "stability.hpp"

namespace mrac {

namespace {

Polynomial poly_from_vec(const VectorXd& v) {
    if (v.size() == 0) return Polynomial{0.0};
    return Polynomial(std::vector<double>(v.data(), v.data() + v.size()));
}

void check_design_polys(const RationalTF& G, const Polynomial& lambda, const Polynomial& pm,
                        const char* what) {
    G.validate();
    const int n = G.P.degree();
    const int nstar = relative_degree(G);
    if (n < 2)
        throw assumption_error(std::string(what) + ": output-feedback design needs plant order n >= 2");
    if (lambda.degree() != n - 1 || !lambda.is_monic())
        throw std::invalid_argument(std::string(what) + ": Lambda must be monic of degree n-1");
    if (pm.degree() != nstar || !pm.is_monic())
        throw std::invalid_argument(std::string(what) +
                                    ": P_m must be monic of degree n* = " + std::to_string(nstar));
    if (!is_hurwitz(lambda))
        throw assumption_error(std::string(what) + ": Lambda is not Hurwitz");
    if (!is_hurwitz(pm))
        throw assumption_error(std::string(what) + ": P_m is not Hurwitz");
}

// L(s) (P(s) - Z(s) P_m(s)), the fixed right-hand side of the identity.
Polynomial matching_rhs(const RationalTF& G, const Polynomial& lambda, const Polynomial& pm) {
    return lambda * (G.P - G.Z * pm);
}

}  // namespace

OutputFbMatch solve_output_matching(const RationalTF& G, const Polynomial& lambda,
                                    const Polynomial& pm) {
    check_design_polys(G, lambda, pm, "solve_output_matching");
    const int n = G.P.degree();
    const int rows = 2 * n - 1;  // coefficients of s^0 .. s^{2n-2}

    // Unknowns: theta1 (n-1), theta2 (n-1), theta20. Columns hold the
    // coefficient vectors of s^i P(s), kp s^i Z(s), and kp L(s) Z(s).
    MatrixXd M = MatrixXd::Zero(rows, rows);
    const Polynomial kpz = G.kp * G.Z;
    const Polynomial lkpz = lambda * kpz;
    for (int i = 0; i < n - 1; ++i) {
        for (int r = 0; r < rows; ++r) {
            M(r, i) = (r - i >= 0) ? G.P.coeff(r - i) : 0.0;
            M(r, n - 1 + i) = (r - i >= 0) ? kpz.coeff(r - i) : 0.0;
        }
    }
    for (int r = 0; r < rows; ++r) M(r, 2 * n - 2) = lkpz.coeff(r);

    const Polynomial rhs_poly = matching_rhs(G, lambda, pm);
    VectorXd rhs = VectorXd::Zero(rows);
    for (int r = 0; r < rows; ++r) rhs(r) = rhs_poly.coeff(r);

    const Eigen::PartialPivLU<MatrixXd> lu(M);
    if (lu.rcond() < 1e-14)
        throw assumption_error(
            "solve_output_matching: matching system singular; Z(s) and P(s) share a root");
    const VectorXd x = lu.solve(rhs);
    if (!x.allFinite())
        throw assumption_error("solve_output_matching: matching system produced non-finite solution");

    OutputFbMatch out;
    out.theta1 = x.segment(0, n - 1);
    out.theta2 = x.segment(n - 1, n - 1);
    out.theta20 = x(2 * n - 2);
    out.theta3 = 1.0 / G.kp;

    const double res = output_matching_residual(G, lambda, pm, out);
    if (!(res < 1e-8))
        throw assumption_error("solve_output_matching: matching residual " + std::to_string(res) +
                               " exceeds 1e-8; Z(s) and P(s) may share a root");
    return out;
}

double output_matching_residual(const RationalTF& G, const Polynomial& lambda,
                                const Polynomial& pm, const OutputFbMatch& m) {
    const Polynomial lhs = poly_from_vec(m.theta1) * G.P +
                           (poly_from_vec(m.theta2) + m.theta20 * lambda) * (G.kp * G.Z);
    const Polynomial rhs = matching_rhs(G, lambda, pm);
    const Polynomial diff = lhs - rhs;
    double scale = 0.0;
    for (double c : lhs.coeffs()) scale = std::max(scale, std::abs(c));
    for (double c : rhs.coeffs()) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) scale = 1.0;
    double worst = 0.0;
    for (double c : diff.coeffs()) worst = std::max(worst, std::abs(c));
    return worst / scale;
}

StateFbMatch solve_state_matching(const StateSpace& sys, const Polynomial& pm) {
    const RationalTF G = tf_from_ss(sys);
    const int nstar = relative_degree(G);
    if (pm.degree() != nstar || !pm.is_monic())
        throw std::invalid_argument("solve_state_matching: P_m must be monic of degree n* = " +
                                    std::to_string(nstar));
    if (!is_hurwitz(pm))
        throw assumption_error("solve_state_matching: P_m is not Hurwitz");

    // Place char-poly(A + b k1^T) = Z(s) P_m(s); then b k2 restores the gain.
    PlacedGain placed = place_state_feedback(sys.A, sys.b, G.Z * pm);
    StateFbMatch out;
    out.k1 = std::move(placed.gain);
    out.k2 = 1.0 / G.kp;
    out.condition = placed.condition;
    return out;
}

double state_matching_residual(const StateSpace& sys, const Polynomial& pm,
                               const StateFbMatch& m) {
    StateSpace closed = sys;
    closed.A += sys.b * m.k1.transpose();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double w = std::pow(10.0, -2.0 + 4.0 * i / 19.0);
        const std::complex<double> s(0.0, w);
        const std::complex<double> wm = 1.0 / pm.eval(s);
        const std::complex<double> h = resolvent_response(closed, s) * m.k2;
        worst = std::max(worst, std::abs(h - wm) / std::abs(wm));
    }
    return worst;
}

}  // namespace mrac
