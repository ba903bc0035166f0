#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>

#include "stability.hpp"

namespace mrac {

namespace {

VerifyCheck bool_check(const std::string& name, bool pass, const std::string& note) {
    VerifyCheck c;
    c.name = name;
    c.pass = pass;
    c.note = note;
    return c;
}

VerifyCheck numeric_check(const std::string& name, double value, double threshold,
                          const std::string& note = "") {
    VerifyCheck c;
    c.name = name;
    c.numeric = true;
    c.value = value;
    c.threshold = threshold;
    c.pass = std::isfinite(value) && value < threshold;
    c.note = note;
    return c;
}

// max_s || (sI - F)^{-1} g - Theta^T a(s) / Lambda_e(s) || relative, over
// 20 log-spaced frequencies; verifies a stored Theta against its generator.
double observer_frequency_residual(const MatrixXd& F, const VectorXd& g, const MatrixXd& Theta,
                                   const Polynomial& lambda_e) {
    const int m = static_cast<int>(F.rows());
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double wfreq = std::pow(10.0, -2.0 + 4.0 * i / 19.0);
        const std::complex<double> s(0.0, wfreq);
        Eigen::MatrixXcd M =
            s * Eigen::MatrixXcd::Identity(m, m) - F.cast<std::complex<double>>();
        const Eigen::VectorXcd direct = M.partialPivLu().solve(g.cast<std::complex<double>>());
        Eigen::VectorXcd from_theta = Eigen::VectorXcd::Zero(m);
        std::complex<double> spow = 1.0;
        for (int j = 0; j < m; ++j) {
            from_theta += spow * Theta.row(j).transpose().cast<std::complex<double>>();
            spow *= s;
        }
        from_theta /= lambda_e.eval(s);
        const double denom = direct.norm() + from_theta.norm() + 1e-30;
        worst = std::max(worst, (direct - from_theta).norm() / denom);
    }
    return worst;
}

double reassembly_residual(const Wiring& w) {
    const NominalDesign again =
        assemble_nominal(w.scn.scheme, w.ofb ? &*w.ofb : nullptr, w.sfb ? &*w.sfb : nullptr,
                         w.axm ? &*w.axm : nullptr, w.aym ? &*w.aym : nullptr);
    const double scale = std::max(1.0, w.nominal.theta_star.lpNorm<Eigen::Infinity>());
    double worst = (again.theta_star - w.nominal.theta_star).lpNorm<Eigen::Infinity>() / scale;
    worst = std::max(worst, std::abs(again.rho_star - w.nominal.rho_star) /
                                std::max(1.0, std::abs(w.nominal.rho_star)));
    return worst;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::str() const {
    std::ostringstream out;
    size_t passed = 0;
    for (const VerifyCheck& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (c.numeric) out << ": value=" << fmt(c.value) << " threshold=" << fmt(c.threshold);
        if (!c.note.empty()) out << " (" << c.note << ")";
        out << "\n";
        if (c.pass) ++passed;
    }
    for (const std::string& wmsg : warnings) out << "warning: " << wmsg << "\n";
    out << "RESULT: " << (passed == checks.size() ? "PASS" : "FAIL") << " (" << passed << "/"
        << checks.size() << " checks)\n";
    return out.str();
}

VerifyReport verify_design(const Wiring& w) {
    VerifyReport rep;
    const Scenario& scn = w.scn;

    const bool min_phase = w.tf.Z.degree() == 0 || is_hurwitz(w.tf.Z);
    rep.checks.push_back(bool_check("minimum_phase", min_phase,
                                    min_phase ? "all plant zeros stable"
                                              : "a plant zero is not strictly stable"));

    const bool sign_ok = (w.tf.kp > 0.0 ? 1.0 : -1.0) == scn.sign_kp;
    rep.checks.push_back(bool_check(
        "kp_sign_declared", sign_ok,
        sign_ok ? "declared sign_kp matches the plant high-frequency gain"
                : "declared sign_kp contradicts the plant high-frequency gain"));

    rep.checks.push_back(bool_check("reference_stable",
                                    is_hurwitz(char_poly(scn.ref_closed_loop())),
                                    "reference system closed under k1m"));

    const int nm_star = relative_degree_markov(scn.ref_sys);
    rep.checks.push_back(bool_check("relative_degree_order", nm_star >= w.n_star,
                                    "n_m* = " + std::to_string(nm_star) +
                                        ", n* = " + std::to_string(w.n_star)));

    rep.checks.push_back(bool_check("pm_stable_monic",
                                    scn.P_m.is_monic() && is_hurwitz(scn.P_m),
                                    "degree " + std::to_string(scn.P_m.degree())));
    if (w.layout.len_plant_banks > 0)
        rep.checks.push_back(bool_check("lambda_stable_monic",
                                        scn.Lambda.is_monic() && is_hurwitz(scn.Lambda),
                                        "degree " + std::to_string(scn.Lambda.degree())));
    if (w.layout.len_ref_banks > 0)
        rep.checks.push_back(bool_check("lambda_e_stable_monic",
                                        scn.Lambda_e.is_monic() && is_hurwitz(scn.Lambda_e),
                                        "degree " + std::to_string(scn.Lambda_e.degree())));

    if (w.ofb)
        rep.checks.push_back(numeric_check(
            "output_matching_residual",
            output_matching_residual(w.tf, scn.Lambda, scn.P_m, *w.ofb), 1e-8));
    if (w.sfb)
        rep.checks.push_back(numeric_check(
            "state_matching_residual",
            state_matching_residual(scn.plant, scn.P_m, *w.sfb), 1e-6));
    if (w.obs) {
        const Polynomial diff = char_poly(w.obs->F) - w.obs->lambda_e;
        double worst = 0.0;
        for (double c : diff.coeffs()) worst = std::max(worst, std::abs(c));
        rep.checks.push_back(numeric_check("observer_charpoly_residual", worst, 1e-8));
        rep.checks.push_back(numeric_check(
            "observer_um_frequency_residual",
            observer_frequency_residual(w.obs->F, w.obs->g_u, w.obs->Theta1, w.obs->lambda_e),
            1e-6));
        rep.checks.push_back(numeric_check(
            "observer_ym_frequency_residual",
            observer_frequency_residual(w.obs->F, w.obs->g_y, w.obs->Theta2, w.obs->lambda_e),
            1e-6));
    }

    rep.checks.push_back(
        numeric_check("theta_star_reassembly", reassembly_residual(w), 1e-12));

    if (w.sfb && w.sfb->condition > 1e12)
        rep.warnings.push_back("state-feedback placement condition " + fmt(w.sfb->condition) +
                               " exceeds 1e12");
    if (w.obs && w.obs->condition > 1e12)
        rep.warnings.push_back("observer placement condition " + fmt(w.obs->condition) +
                               " exceeds 1e12");
    for (const auto& [zero, pole] : near_cancellations(w.tf)) {
        std::ostringstream msg;
        msg << "near pole-zero cancellation: zero (" << zero.real() << "," << zero.imag()
            << "j) vs pole (" << pole.real() << "," << pole.imag() << "j)";
        rep.warnings.push_back(msg.str());
    }
    return rep;
}

}  // namespace mrac
