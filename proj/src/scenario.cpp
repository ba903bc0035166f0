#include "scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "stability.hpp"
#include "transfer_function.hpp"

namespace mrac {

double ref_input(const RefInputSpec& spec, double t) {
    if (spec.kind == RefInputSpec::Kind::Constant) return spec.constant;
    double v = 0.0;
    for (const auto& [amp, freq] : spec.sines) v += amp * std::sin(freq * t);
    return v;
}

int Scenario::n_star() const {
    return relative_degree_markov(plant);
}

MatrixXd Scenario::ref_closed_loop() const {
    return ref_sys.A + ref_sys.b * k1m.transpose();
}

void Scenario::validate() const {
    plant.validate();
    ref_sys.validate();
    const int n = plant.n();
    if (ref_sys.n() != n)
        throw assumption_error(
            "scenario: reference order must equal plant order (the regressor layouts assume it)");
    if (k1m.size() != n)
        throw std::invalid_argument("scenario: k1m dimension must match the reference order");
    if (x0.size() != 0 && x0.size() != n)
        throw std::invalid_argument("scenario: x0 dimension must match the plant order");
    if (xm0.size() != 0 && xm0.size() != n)
        throw std::invalid_argument("scenario: xm0 dimension must match the reference order");

    if (!(dt > 0.0) || !(horizon > 0.0) || dt > horizon)
        throw std::invalid_argument("scenario: need 0 < dt <= horizon");

    const int nstar = n_star();
    if (nstar == 0)
        throw assumption_error("scenario: plant transfer function is identically zero");
    if (P_m.degree() != nstar || !P_m.is_monic())
        throw assumption_error("scenario: P_m must be monic of degree n* = " +
                               std::to_string(nstar));
    if (!is_hurwitz(P_m)) throw assumption_error("scenario: P_m is not Hurwitz");

    const bool needs_lambda = scheme == Scheme::OfbXm || scheme == Scheme::OfbYm;
    const bool needs_lambda_e = scheme == Scheme::SfbYm || scheme == Scheme::OfbYm;
    if (needs_lambda) {
        if (!has_lambda)
            throw assumption_error(std::string("scenario: scheme ") + scheme_name(scheme) +
                                   " requires the key Lambda in [design]");
        if (n < 2)
            throw assumption_error("scenario: output-feedback schemes need plant order n >= 2");
        if (Lambda.degree() != n - 1 || !Lambda.is_monic())
            throw assumption_error("scenario: Lambda must be monic of degree n-1");
        if (!is_hurwitz(Lambda)) throw assumption_error("scenario: Lambda is not Hurwitz");
    }
    if (needs_lambda_e) {
        if (!has_lambda_e)
            throw assumption_error(std::string("scenario: scheme ") + scheme_name(scheme) +
                                   " requires the key Lambda_e in [design]");
        if (n < 2)
            throw assumption_error("scenario: y_m-based schemes need reference order n >= 2");
        if (Lambda_e.degree() != n - 1 || !Lambda_e.is_monic())
            throw assumption_error("scenario: Lambda_e must be monic of degree n-1");
        if (!is_hurwitz(Lambda_e)) throw assumption_error("scenario: Lambda_e is not Hurwitz");
    }

    if (sign_kp != 1.0 && sign_kp != -1.0)
        throw std::invalid_argument("scenario: sign_kp must be +1 or -1");
    if (gamma_theta < 0.0 || gamma_rho < 0.0)
        throw std::invalid_argument("scenario: adaptation gains must be nonnegative");
    if ((gamma_theta == 0.0) != (gamma_rho == 0.0))
        throw assumption_error(
            "scenario: adaptation gains must be both zero (frozen parameters) or both positive");

    // Boundedness surrogate for the reference: its stabilized dynamics must
    // be Hurwitz, otherwise y_m, x_m, u_m grow unbounded.
    if (!is_hurwitz(char_poly(ref_closed_loop())))
        throw assumption_error(
            "scenario: reference system closed under k1m is unstable; its signals would be unbounded");

    const int nm_star = relative_degree_markov(ref_sys);
    if (nm_star == 0)
        throw assumption_error("scenario: reference transfer function is identically zero");
    if (nm_star < nstar)
        throw assumption_error("scenario: reference relative degree " + std::to_string(nm_star) +
                               " is below the plant relative degree " + std::to_string(nstar) +
                               "; tracking would need derivatives of the reference input");

    if (!theta0_is_scale) {
        const int p = regressor_dim(scheme, n);
        if (theta0.size() != p)
            throw std::invalid_argument("scenario: explicit theta0 must have length " +
                                        std::to_string(p) + " for scheme " + scheme_name(scheme));
    }
}

}  // namespace mrac
