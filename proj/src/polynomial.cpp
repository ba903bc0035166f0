#include "polynomial.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mrac {

Polynomial::Polynomial(std::vector<double> c) : coeffs_(std::move(c)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    for (double v : coeffs_) {
        if (!std::isfinite(v)) throw std::invalid_argument("polynomial coefficient not finite");
    }
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::eval(double s) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return Polynomial{0.0};
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no monic form");
    std::vector<double> c = coeffs_;
    const double lead = c.back();
    for (double& v : c) v /= lead;
    c.back() = 1.0;  // exact even when lead/lead rounds oddly
    return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
    std::string out;
    char buf[64];
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const double v = coeffs_[i];
        if (v == 0.0 && coeffs_.size() > 1) continue;
        std::snprintf(buf, sizeof buf, "%g", std::abs(v));
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += (v < 0) ? " - " : " + ";
        }
        const bool unit = std::abs(v) == 1.0 && i > 0;
        if (!unit) out += buf;
        if (i == 1) out += "s";
        else if (i > 1) out += "s^" + std::to_string(i);
    }
    if (out.empty()) out = "0";
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-1.0 * b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{0.0};
    std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double k, const Polynomial& p) {
    std::vector<double> c = p.coeffs();
    for (double& v : c) v *= k;
    return Polynomial(std::move(c));
}

Polynomial poly_from_roots(const std::vector<double>& roots) {
    Polynomial p{1.0};
    for (double r : roots) p = p * Polynomial{-r, 1.0};
    return p;
}

}  // namespace mrac
