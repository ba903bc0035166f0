#include "simulate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "errors.hpp"
#include "rk4.hpp"
#include "stability.hpp"

namespace mrac {

namespace {

StateLayout make_layout(Scheme scheme, int n, int q, int p) {
    StateLayout L;
    L.n = n;
    L.nf = n - 1;
    L.q = q;
    L.p = p;
    const bool ofb = scheme == Scheme::OfbXm || scheme == Scheme::OfbYm;
    const bool ym = scheme == Scheme::SfbYm || scheme == Scheme::OfbYm;
    L.len_plant_banks = ofb ? L.nf : 0;
    L.len_ref_banks = ym ? L.nf : 0;
    L.off_x = 0;
    L.off_xm = n;
    L.off_fb_u = 2 * n;
    L.off_fb_y = L.off_fb_u + L.len_plant_banks;
    L.off_fb_um = L.off_fb_y + L.len_plant_banks;
    L.off_fb_ym = L.off_fb_um + L.len_ref_banks;
    L.off_zeta = L.off_fb_ym + L.len_ref_banks;
    L.off_xi = L.off_zeta + q * p;
    L.off_theta = L.off_xi + q;
    L.off_rho = L.off_theta + p;
    L.total = L.off_rho + 1;
    return L;
}

double xm_steady_envelope(const Scenario& scn) {
    const MatrixXd Amc = scn.ref_closed_loop();
    const int n = static_cast<int>(Amc.rows());
    double env = 0.0;
    if (scn.input.kind == RefInputSpec::Kind::Constant) {
        const VectorXd xss = Amc.partialPivLu().solve(scn.ref_sys.b);
        env = xss.norm() * std::abs(scn.input.constant);
    } else {
        for (const auto& [amp, freq] : scn.input.sines) {
            Eigen::MatrixXcd M = std::complex<double>(0.0, freq) *
                                     Eigen::MatrixXcd::Identity(n, n) -
                                 Amc.cast<std::complex<double>>();
            const Eigen::VectorXcd x = M.partialPivLu().solve(
                scn.ref_sys.b.cast<std::complex<double>>());
            env += std::abs(amp) * x.norm();
        }
    }
    // Transient allowance for a nonzero reference initial state.
    if (scn.xm0.size() > 0) env += scn.xm0.norm();
    return env;
}

}  // namespace

Wiring make_wiring(const Scenario& scn_in) {
    Wiring w;
    w.scn = scn_in;
    w.scn.validate();
    const Scenario& scn = w.scn;

    w.tf = tf_from_ss(scn.plant);
    if (w.tf.Z.degree() >= 1 && !is_hurwitz(w.tf.Z))
        throw assumption_error(
            "plant is not minimum phase: a transfer-function zero is unstable");

    w.n = scn.plant.n();
    w.n_star = relative_degree(w.tf);
    w.p = regressor_dim(scn.scheme, w.n);

    const bool ofb_scheme = scn.scheme == Scheme::OfbXm || scn.scheme == Scheme::OfbYm;
    const bool ym_scheme = scn.scheme == Scheme::SfbYm || scn.scheme == Scheme::OfbYm;

    if (ofb_scheme)
        w.ofb = solve_output_matching(w.tf, scn.Lambda, scn.P_m);
    else
        w.sfb = solve_state_matching(scn.plant, scn.P_m);
    w.axm = rm_param_xm(scn.ref_sys, scn.P_m, w.n_star);
    if (ym_scheme) {
        w.obs = reduced_observer_design(scn.ref_sys, scn.Lambda_e);
        w.aym = rm_param_ym(*w.obs, *w.axm);
    }
    w.nominal = assemble_nominal(scn.scheme, w.ofb ? &*w.ofb : nullptr,
                                 w.sfb ? &*w.sfb : nullptr, w.axm ? &*w.axm : nullptr,
                                 w.aym ? &*w.aym : nullptr);

    w.gains.Gamma = scn.gamma_theta * MatrixXd::Identity(w.p, w.p);
    w.gains.gamma = scn.gamma_rho;
    w.gains.sign_kp = scn.sign_kp;
    w.gains.validate(w.p);

    if (ofb_scheme) w.plant_bank = realize_filter_bank(scn.Lambda);
    if (ym_scheme) w.ref_bank = realize_filter_bank(scn.Lambda_e);
    w.wm = realize_wm(scn.P_m, w.p);

    w.layout = make_layout(scn.scheme, w.n, w.n_star, w.p);

    w.theta0 = scn.theta0_is_scale ? VectorXd(scn.theta0_scale * w.nominal.theta_star)
                                   : scn.theta0;
    w.rho0 = scn.rho0_is_scale ? scn.rho0_scale * w.nominal.rho_star : scn.rho0;
    w.xm_envelope = xm_steady_envelope(scn);
    return w;
}

void SimWorkspace::resize(const StateLayout& L) {
    cs.theta.resize(L.p);
    cs.fb_u.resize(L.len_plant_banks);
    cs.fb_y.resize(L.len_plant_banks);
    cs.fb_um.resize(L.len_ref_banks);
    cs.fb_ym.resize(L.len_ref_banks);
    cs.zeta.resize(L.q, L.p);
    cs.xi_channel.resize(L.q);
    x_buf.resize(L.n);
    xm_buf.resize(L.n);
    omega.resize(L.p);
    zeta_out.resize(L.p);
}

void closed_loop_rhs(const Wiring& w, double t, const VectorXd& s, VectorXd& ds,
                     SimWorkspace& ws) {
    const StateLayout& L = w.layout;
    ds.resize(L.total);

    const auto x = s.segment(L.off_x, L.n);
    const auto xm = s.segment(L.off_xm, L.n);

    const double v_m = ref_input(w.scn.input, t);
    const double u_m = w.scn.k1m.dot(xm) + v_m;
    const double y = w.scn.plant.c * x;
    const double y_m = w.scn.ref_sys.c * xm;
    const double e = y - y_m;

    ws.cs.theta = s.segment(L.off_theta, L.p);
    ws.cs.rho = s(L.off_rho);
    if (L.len_plant_banks > 0) {
        ws.cs.fb_u = s.segment(L.off_fb_u, L.nf);
        ws.cs.fb_y = s.segment(L.off_fb_y, L.nf);
    }
    if (L.len_ref_banks > 0) {
        ws.cs.fb_um = s.segment(L.off_fb_um, L.nf);
        ws.cs.fb_ym = s.segment(L.off_fb_ym, L.nf);
    }
    ws.cs.zeta = Eigen::Map<const MatrixXd>(s.data() + L.off_zeta, L.q, L.p);
    ws.cs.xi_channel = s.segment(L.off_xi, L.q);

    ws.x_buf = x;
    ws.xm_buf = xm;
    ws.omega = build_regressor(w.scn.scheme, &ws.x_buf, y, &ws.xm_buf, y_m, u_m, ws.cs);
    const double u = control_output(ws.cs.theta, ws.omega);

    ds.segment(L.off_x, L.n) = w.scn.plant.A * x + w.scn.plant.b * u;
    ds.segment(L.off_xm, L.n) = w.scn.ref_sys.A * xm + w.scn.ref_sys.b * u_m;
    if (L.len_plant_banks > 0) {
        ds.segment(L.off_fb_u, L.nf) = w.plant_bank.A * ws.cs.fb_u + w.plant_bank.b * u;
        ds.segment(L.off_fb_y, L.nf) = w.plant_bank.A * ws.cs.fb_y + w.plant_bank.b * y;
    }
    if (L.len_ref_banks > 0) {
        ds.segment(L.off_fb_um, L.nf) = w.ref_bank.A * ws.cs.fb_um + w.ref_bank.b * u_m;
        ds.segment(L.off_fb_ym, L.nf) = w.ref_bank.A * ws.cs.fb_ym + w.ref_bank.b * y_m;
    }
    Eigen::Map<MatrixXd> dzeta(ds.data() + L.off_zeta, L.q, L.p);
    dzeta = w.wm.A * ws.cs.zeta + w.wm.b * ws.omega.transpose();
    ds.segment(L.off_xi, L.q) = w.wm.A * ws.cs.xi_channel + w.wm.b * u;

    ws.zeta_out = ws.cs.zeta.row(0).transpose();
    const EstimationError est =
        estimation_error(e, ws.cs.rho, ws.cs.theta, ws.zeta_out, ws.cs.xi_channel(0));
    const AdaptationRates rates =
        adaptation_rates(est.eps, ws.zeta_out, est.xi, est.m, w.gains);
    ds.segment(L.off_theta, L.p) = rates.theta_dot;
    ds(L.off_rho) = rates.rho_dot;

    ws.obs.y = y;
    ws.obs.y_m = y_m;
    ws.obs.e = e;
    ws.obs.u = u;
    ws.obs.u_m = u_m;
    ws.obs.eps_over_m = est.eps / est.m;
}

VectorXd initial_state(const Wiring& w) {
    const StateLayout& L = w.layout;
    VectorXd s = VectorXd::Zero(L.total);
    if (w.scn.x0.size() > 0) s.segment(L.off_x, L.n) = w.scn.x0;
    if (w.scn.xm0.size() > 0) s.segment(L.off_xm, L.n) = w.scn.xm0;
    s.segment(L.off_theta, L.p) = w.theta0;
    s(L.off_rho) = w.rho0;
    return s;
}

Trace integrate(const Wiring& w) {
    const double dt = w.scn.dt;
    const long long nsteps = std::llround(w.scn.horizon / dt);
    if (nsteps < 1) throw std::invalid_argument("integrate: horizon shorter than one step");

    Trace tr;
    tr.dt = dt;
    tr.horizon = w.scn.horizon;
    tr.scheme = scheme_name(w.scn.scheme);
    tr.xm_envelope = w.xm_envelope;
    const size_t cap = static_cast<size_t>(nsteps) + 1;
    for (auto* v : {&tr.t, &tr.y, &tr.y_m, &tr.e, &tr.u, &tr.u_m, &tr.theta_norm, &tr.rho,
                    &tr.eps_over_m, &tr.V})
        v->reserve(cap);

    VectorXd s = initial_state(w);
    SimWorkspace ws;
    ws.resize(w.layout);
    Rk4Workspace rk;
    rk.resize(w.layout.total);
    const auto f = [&w, &ws](double t, const VectorXd& sv, VectorXd& dv) {
        closed_loop_rhs(w, t, sv, dv, ws);
    };

    for (long long k = 0; k <= nsteps; ++k) {
        const double t = static_cast<double>(k) * dt;
        f(t, s, rk.k1);  // stage 1 doubles as the sample observation

        const bool obs_ok = std::isfinite(ws.obs.e) && std::isfinite(ws.obs.u) &&
                            std::isfinite(ws.obs.eps_over_m) && rk.k1.allFinite();
        if (!obs_ok) {
            tr.diverged = true;
            tr.divergence_time = t;
            break;
        }

        tr.t.push_back(t);
        tr.y.push_back(ws.obs.y);
        tr.y_m.push_back(ws.obs.y_m);
        tr.e.push_back(ws.obs.e);
        tr.u.push_back(ws.obs.u);
        tr.u_m.push_back(ws.obs.u_m);
        tr.theta_norm.push_back(s.segment(w.layout.off_theta, w.layout.p).norm());
        tr.rho.push_back(s(w.layout.off_rho));
        tr.eps_over_m.push_back(ws.obs.eps_over_m);
        tr.V.push_back(lyapunov_v(s.segment(w.layout.off_theta, w.layout.p), s(w.layout.off_rho),
                                  w.nominal, w.gains));
        tr.max_xm_norm =
            std::max(tr.max_xm_norm, s.segment(w.layout.off_xm, w.layout.n).norm());

        if (k == nsteps) break;
        rk4_finish_step(f, t, dt, s, rk);
        if (!s.allFinite() || s.norm() > 1e12) {
            tr.diverged = true;
            tr.divergence_time = t + dt;
            break;
        }
    }
    return tr;
}

Trace integrate(const Scenario& scn) {
    return integrate(make_wiring(scn));
}

Metrics metrics(const Trace& tr) {
    Metrics m;
    m.xm_bounded = tr.xm_bounded();
    m.finite = !tr.diverged;
    const size_t nsamp = tr.size();
    if (nsamp == 0) return m;

    const double tcut = 0.8 * tr.t.back();
    double sum = 0.0;
    size_t count = 0;
    for (size_t i = 0; i < nsamp; ++i) {
        m.max_abs_e = std::max(m.max_abs_e, std::abs(tr.e[i]));
        if (tr.t[i] >= tcut) {
            sum += tr.e[i] * tr.e[i];
            ++count;
        }
    }
    if (count > 0) m.tail_rms_e = std::sqrt(sum / static_cast<double>(count));

    for (size_t i = 0; i + 1 < nsamp; ++i) {
        m.V_violation_max = std::max(m.V_violation_max, tr.V[i + 1] - tr.V[i]);
        const double f0 = tr.eps_over_m[i] * tr.eps_over_m[i];
        const double f1 = tr.eps_over_m[i + 1] * tr.eps_over_m[i + 1];
        m.L2_integral += 0.5 * (f0 + f1) * (tr.t[i + 1] - tr.t[i]);
    }
    m.V_violation_max = std::max(m.V_violation_max, 0.0);
    return m;
}

std::string metrics_line(const Metrics& m) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "tail_rms_e=%.6g max_abs_e=%.6g V_violation_max=%.6g L2_integral=%.6g "
                  "xm_bounded=%s diverged=%s",
                  m.tail_rms_e, m.max_abs_e, m.V_violation_max, m.L2_integral,
                  m.xm_bounded ? "yes" : "no", m.finite ? "no" : "yes");
    return buf;
}

void write_csv(const Trace& tr, const std::string& path, int stride) {
    if (stride < 1) throw std::invalid_argument("write_csv: stride must be >= 1");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open '" + path + "' for writing");
    out << "t,y,y_m,e,u,u_m,theta_norm,rho,eps_over_m,V\n";

    char buf[512];
    const auto write_row = [&](size_t i) {
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", tr.t[i],
                      tr.y[i], tr.y_m[i], tr.e[i], tr.u[i], tr.u_m[i], tr.theta_norm[i],
                      tr.rho[i], tr.eps_over_m[i], tr.V[i]);
        out << buf;
    };

    const size_t nsamp = tr.size();
    size_t last_written = nsamp;  // sentinel: nothing written yet
    for (size_t i = 0; i < nsamp; i += static_cast<size_t>(stride)) {
        write_row(i);
        last_written = i;
    }
    // Keep the final sample so end-of-run values survive striding.
    if (nsamp > 0 && last_written != nsamp - 1) write_row(nsamp - 1);

    if (!out) throw std::runtime_error("write_csv: write to '" + path + "' failed");
}

}  // namespace mrac
