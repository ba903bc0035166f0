#include "certificate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "errors.hpp"

namespace mrac {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string join(const VectorXd& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += fmt(v(i));
    }
    return out;
}

std::string join(const std::vector<double>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += fmt(v[i]);
    }
    return out;
}

std::string join_rows(const MatrixXd& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ';';
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += fmt(m(i, j));
        }
    }
    return out;
}

double observer_charpoly_residual(const ObserverDesign& obs) {
    const Polynomial diff = char_poly(obs.F) - obs.lambda_e;
    double worst = 0.0;
    for (double c : diff.coeffs()) worst = std::max(worst, std::abs(c));
    return worst;
}

}  // namespace

std::string design_certificate(const Wiring& w) {
    std::ostringstream out;
    const Scenario& scn = w.scn;

    out << "# matched-parameter design for scenario '" << scn.name << "'\n";
    out << "# scheme " << scheme_name(scn.scheme) << ", plant order " << w.n
        << ", relative degree " << w.n_star << ", kp = " << fmt6(w.tf.kp) << "\n";
    out << "# theta* has " << w.p << " entries, rho* = " << fmt6(w.nominal.rho_star) << "\n";
    if (w.ofb) {
        out << "# output matching residual "
            << fmt6(output_matching_residual(w.tf, scn.Lambda, scn.P_m, *w.ofb)) << "\n";
    }
    if (w.sfb) {
        out << "# state matching frequency residual "
            << fmt6(state_matching_residual(scn.plant, scn.P_m, *w.sfb)) << "\n";
        if (w.sfb->condition > 1e12)
            out << "# warning: state-feedback placement condition " << fmt6(w.sfb->condition)
                << " exceeds 1e12\n";
    }
    if (w.obs) {
        out << "# observer characteristic-polynomial residual "
            << fmt6(observer_charpoly_residual(*w.obs)) << "\n";
        if (w.obs->condition > 1e12)
            out << "# warning: observer placement condition " << fmt6(w.obs->condition)
                << " exceeds 1e12\n";
    }

    out << "format = mracsim-design-1\n";
    out << "scheme = " << scheme_name(scn.scheme) << "\n";
    out << "n = " << w.n << "\n";
    out << "n_star = " << w.n_star << "\n";
    out << "kp = " << fmt(w.tf.kp) << "\n";
    out << "Z = " << join(w.tf.Z.coeffs()) << "\n";
    out << "P = " << join(w.tf.P.coeffs()) << "\n";
    out << "P_m = " << join(scn.P_m.coeffs()) << "\n";
    if (scn.scheme == Scheme::OfbXm || scn.scheme == Scheme::OfbYm)
        out << "Lambda = " << join(scn.Lambda.coeffs()) << "\n";
    if (scn.scheme == Scheme::SfbYm || scn.scheme == Scheme::OfbYm)
        out << "Lambda_e = " << join(scn.Lambda_e.coeffs()) << "\n";

    if (w.sfb) {
        out << "k1_star = " << join(w.sfb->k1) << "\n";
        out << "k2_star = " << fmt(w.sfb->k2) << "\n";
        out << "placement_condition = " << fmt(w.sfb->condition) << "\n";
        out << "state_matching_residual = "
            << fmt(state_matching_residual(scn.plant, scn.P_m, *w.sfb)) << "\n";
    }
    if (w.ofb) {
        out << "theta1_star = " << join(w.ofb->theta1) << "\n";
        out << "theta2_star = " << join(w.ofb->theta2) << "\n";
        out << "theta20_star = " << fmt(w.ofb->theta20) << "\n";
        out << "theta3_star = " << fmt(w.ofb->theta3) << "\n";
        out << "output_matching_residual = "
            << fmt(output_matching_residual(w.tf, scn.Lambda, scn.P_m, *w.ofb)) << "\n";
    }
    if (w.axm) {
        out << "alpha1 = " << join(w.axm->alpha1) << "\n";
        out << "alpha2 = " << fmt(w.axm->alpha2) << "\n";
    }
    if (w.obs) {
        out << "L_r = " << join(w.obs->Lr) << "\n";
        out << "Theta1 = " << join_rows(w.obs->Theta1) << "\n";
        out << "Theta2 = " << join_rows(w.obs->Theta2) << "\n";
        out << "observer_condition = " << fmt(w.obs->condition) << "\n";
        out << "observer_charpoly_residual = " << fmt(observer_charpoly_residual(*w.obs)) << "\n";
    }
    if (w.aym) {
        out << "beta1 = " << join(w.aym->beta1) << "\n";
        out << "beta2 = " << join(w.aym->beta2) << "\n";
        out << "beta20 = " << fmt(w.aym->beta20) << "\n";
    }
    out << "theta_star = " << join(w.nominal.theta_star) << "\n";
    out << "rho_star = " << fmt(w.nominal.rho_star) << "\n";
    return out.str();
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        if (line[a] == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("certificate line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        auto strip = [](std::string s) {
            const size_t i = s.find_first_not_of(" \t\r");
            if (i == std::string::npos) return std::string();
            const size_t j = s.find_last_not_of(" \t\r");
            return s.substr(i, j - i + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty())
            throw parse_error("certificate line " + std::to_string(lineno) + ": empty key");
        out[key] = value;
    }
    return out;
}

std::vector<double> parse_csv_numbers(const std::string& text) {
    std::vector<double> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        char* end = nullptr;
        const double v = std::strtod(cur.c_str(), &end);
        while (end != cur.c_str() + cur.size() && std::isspace(static_cast<unsigned char>(*end)))
            ++end;
        if (cur.empty() || end != cur.c_str() + cur.size() || !std::isfinite(v))
            throw parse_error("bad number '" + cur + "' in list");
        out.push_back(v);
    }
    return out;
}

}  // namespace mrac
