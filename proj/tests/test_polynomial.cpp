#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"

// Throw-checking macros evaluate [[nodiscard]] calls for their exception only.
#pragma GCC diagnostic ignored "-Wunused-result"
#include "polynomial.hpp"

using mrac::Polynomial;
using mrac::poly_from_roots;

TEST_CASE("construction strips trailing zeros and keeps the zero polynomial") {
    Polynomial p({1.0, 2.0, 0.0, 0.0});
    CHECK(p.degree() == 1);
    CHECK(p.coeffs() == std::vector<double>{1.0, 2.0});

    Polynomial z({0.0, 0.0, 0.0});
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);

    CHECK(Polynomial{}.is_zero());
    CHECK_THROWS_AS(Polynomial(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("coefficient access past the stored degree returns zero") {
    Polynomial p({3.0, 0.0, 1.0});
    CHECK(p.coeff(0) == 3.0);
    CHECK(p.coeff(1) == 0.0);
    CHECK(p.coeff(2) == 1.0);
    CHECK(p.coeff(3) == 0.0);
    CHECK(p.coeff(-1) == 0.0);
    CHECK(p.leading() == 1.0);
    CHECK(p.is_monic());
}

TEST_CASE("arithmetic: (1+s)(1+s) = 1+2s+s^2 and sums/differences") {
    Polynomial a({1.0, 1.0});
    Polynomial prod = a * a;
    CHECK(prod.coeffs() == std::vector<double>{1.0, 2.0, 1.0});

    Polynomial b({2.0, 0.0, 1.0});
    CHECK((a + b).coeffs() == std::vector<double>{3.0, 1.0, 1.0});
    CHECK((b - a).coeffs() == std::vector<double>{1.0, -1.0, 1.0});

    // Cancellation of the top coefficient must reduce the degree.
    Polynomial c({0.0, 0.0, 1.0});
    CHECK((b - c).degree() == 0);
    CHECK((b - c).coeffs() == std::vector<double>{2.0});

    CHECK((2.0 * a).coeffs() == std::vector<double>{2.0, 2.0});
    CHECK((a * Polynomial({0.0})).is_zero());
}

TEST_CASE("evaluation at real and complex points") {
    Polynomial p({1.0, 2.0, 3.0});  // 1 + 2s + 3s^2
    CHECK(p.eval(0.0) == 1.0);
    CHECK(p.eval(2.0) == doctest::Approx(17.0));

    std::complex<double> s(0.0, 1.0);
    std::complex<double> v = p.eval(s);  // 1 + 2i - 3
    CHECK(v.real() == doctest::Approx(-2.0));
    CHECK(v.imag() == doctest::Approx(2.0));
}

TEST_CASE("derivative and monic normalization") {
    Polynomial p({1.0, 2.0, 3.0});
    CHECK(p.derivative().coeffs() == std::vector<double>{2.0, 6.0});
    CHECK(Polynomial({5.0}).derivative().is_zero());

    Polynomial q({4.0, 2.0});
    CHECK(q.monic().coeffs() == std::vector<double>{2.0, 1.0});
    CHECK_THROWS_AS(Polynomial({0.0}).monic(), std::invalid_argument);
}

TEST_CASE("poly_from_roots builds the monic product of linear factors") {
    Polynomial p = poly_from_roots({-2.0, -2.0, -2.0});  // (s+2)^3
    REQUIRE(p.degree() == 3);
    CHECK(p.coeff(0) == doctest::Approx(8.0));
    CHECK(p.coeff(1) == doctest::Approx(12.0));
    CHECK(p.coeff(2) == doctest::Approx(6.0));
    CHECK(p.coeff(3) == doctest::Approx(1.0));

    CHECK(poly_from_roots({}).coeffs() == std::vector<double>{1.0});
}

TEST_CASE("multiplication against a convolution oracle on random coefficients") {
    std::vector<double> a{0.5, -1.5, 2.0, 0.25};
    std::vector<double> b{-3.0, 0.75, 1.0};
    Polynomial pa(a), pb(b);
    Polynomial prod = pa * pb;
    // Direct convolution.
    std::vector<double> expect(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) expect[i + j] += a[i] * b[j];
    REQUIRE(prod.coeffs().size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(prod.coeffs()[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}
