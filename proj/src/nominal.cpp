#include "nominal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "errors.hpp"

namespace mrac {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::SfbXm: return "SFB_XM";
        case Scheme::SfbYm: return "SFB_YM";
        case Scheme::OfbXm: return "OFB_XM";
        case Scheme::OfbYm: return "OFB_YM";
    }
    throw std::invalid_argument("scheme_name: unknown scheme");
}

Scheme parse_scheme(const std::string& name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "SFB_XM") return Scheme::SfbXm;
    if (up == "SFB_YM") return Scheme::SfbYm;
    if (up == "OFB_XM") return Scheme::OfbXm;
    if (up == "OFB_YM") return Scheme::OfbYm;
    throw parse_error("unknown scheme '" + name +
                      "' (expected SFB_XM, SFB_YM, OFB_XM, or OFB_YM)");
}

int regressor_dim(Scheme s, int n) {
    if (n < 1) throw std::invalid_argument("regressor_dim: plant order must be >= 1");
    switch (s) {
        case Scheme::SfbXm: return 2 * n + 1;
        case Scheme::SfbYm: return 3 * n;
        case Scheme::OfbXm: return 3 * n;
        case Scheme::OfbYm: return 4 * n - 1;
    }
    throw std::invalid_argument("regressor_dim: unknown scheme");
}

namespace {

[[noreturn]] void missing(Scheme s, const char* what) {
    throw std::invalid_argument(std::string("assemble_nominal: scheme ") + scheme_name(s) +
                                " requires the " + what);
}

}  // namespace

NominalDesign assemble_nominal(Scheme scheme, const OutputFbMatch* ofb, const StateFbMatch* sfb,
                               const RmParamXm* axm, const RmParamYm* aym) {
    NominalDesign out;
    out.scheme = scheme;

    switch (scheme) {
        case Scheme::SfbXm: {
            if (sfb == nullptr) missing(scheme, "state-feedback matching solution");
            if (axm == nullptr) missing(scheme, "reference-state tracking parametrization");
            const int n = static_cast<int>(sfb->k1.size());
            if (axm->alpha1.size() != n)
                throw std::invalid_argument("assemble_nominal: alpha1/k1 dimension mismatch");
            out.theta_star.resize(2 * n + 1);
            out.theta_star << sfb->k1, sfb->k2 * axm->alpha1, sfb->k2 * axm->alpha2;
            out.rho_star = 1.0 / sfb->k2;
            break;
        }
        case Scheme::SfbYm: {
            if (sfb == nullptr) missing(scheme, "state-feedback matching solution");
            if (aym == nullptr) missing(scheme, "output-only tracking parametrization");
            const int n = static_cast<int>(sfb->k1.size());
            if (aym->beta1.size() != n - 1 || aym->beta2.size() != n - 1)
                throw std::invalid_argument("assemble_nominal: beta/k1 dimension mismatch");
            out.theta_star.resize(3 * n);
            out.theta_star << sfb->k1, sfb->k2 * aym->beta1, sfb->k2 * aym->beta2,
                sfb->k2 * aym->beta20, sfb->k2 * aym->alpha2;
            out.rho_star = 1.0 / sfb->k2;
            break;
        }
        case Scheme::OfbXm: {
            if (ofb == nullptr) missing(scheme, "output-feedback matching solution");
            if (axm == nullptr) missing(scheme, "reference-state tracking parametrization");
            const int n = static_cast<int>(ofb->theta1.size()) + 1;
            if (axm->alpha1.size() != n)
                throw std::invalid_argument("assemble_nominal: alpha1/theta1 dimension mismatch");
            out.theta_star.resize(3 * n);
            out.theta_star << ofb->theta1, ofb->theta2, ofb->theta20,
                ofb->theta3 * axm->alpha1, ofb->theta3 * axm->alpha2;
            out.rho_star = 1.0 / ofb->theta3;
            break;
        }
        case Scheme::OfbYm: {
            if (ofb == nullptr) missing(scheme, "output-feedback matching solution");
            if (aym == nullptr) missing(scheme, "output-only tracking parametrization");
            const int n = static_cast<int>(ofb->theta1.size()) + 1;
            if (aym->beta1.size() != n - 1 || aym->beta2.size() != n - 1)
                throw std::invalid_argument("assemble_nominal: beta/theta1 dimension mismatch");
            out.theta_star.resize(4 * n - 1);
            out.theta_star << ofb->theta1, ofb->theta2, ofb->theta20, ofb->theta3 * aym->beta1,
                ofb->theta3 * aym->beta2, ofb->theta3 * aym->beta20, ofb->theta3 * aym->alpha2;
            out.rho_star = 1.0 / ofb->theta3;
            break;
        }
    }
    return out;
}

}  // namespace mrac
