#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace mrac {

// Real polynomial with ascending coefficients: coeffs[i] multiplies s^i.
// Trailing zero coefficients are stripped on construction so that
// degree() == coeffs().size() - 1; the zero polynomial is stored as {0}.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> c) : Polynomial(std::vector<double>(c)) {}
    explicit Polynomial(std::vector<double> c);

    [[nodiscard]] const std::vector<double>& coeffs() const { return coeffs_; }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] double leading() const { return coeffs_.back(); }
    [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    [[nodiscard]] bool is_monic() const { return coeffs_.back() == 1.0; }

    // Coefficient of s^i; zero beyond the stored degree.
    [[nodiscard]] double coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0.0;
    }

    [[nodiscard]] double eval(double s) const;
    [[nodiscard]] std::complex<double> eval(std::complex<double> s) const;

    [[nodiscard]] Polynomial derivative() const;

    // Copy scaled so the leading coefficient is 1; rejects the zero polynomial.
    [[nodiscard]] Polynomial monic() const;

    // Ascending-order human form, e.g. "1 + 2s + s^2".
    [[nodiscard]] std::string str() const;

private:
    std::vector<double> coeffs_;
};

[[nodiscard]] Polynomial operator+(const Polynomial& a, const Polynomial& b);
[[nodiscard]] Polynomial operator-(const Polynomial& a, const Polynomial& b);
[[nodiscard]] Polynomial operator*(const Polynomial& a, const Polynomial& b);
[[nodiscard]] Polynomial operator*(double k, const Polynomial& p);

// (s - r0)(s - r1)... for real roots; test/diagnostic helper.
[[nodiscard]] Polynomial poly_from_roots(const std::vector<double>& roots);

}  // namespace mrac
