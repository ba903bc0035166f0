#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "state_space.hpp"

namespace mrac {

// SISO transfer function G(s) = kp * Z(s) / P(s) with Z, P monic.
struct RationalTF {
    double kp = 0.0;
    Polynomial Z{1.0};
    Polynomial P{1.0};

    void validate() const;
    [[nodiscard]] std::complex<double> eval(std::complex<double> s) const {
        return kp * Z.eval(s) / P.eval(s);
    }
};

// Pole excess deg(P) - deg(Z).
[[nodiscard]] int relative_degree(const RationalTF& tf);

// Smallest i with c A^i b nonzero gives relative degree i+1; Markov
// parameters below 1e-10 * |A|^i * |b| * |c| count as zero. Returns 0
// when all n of them vanish (zero transfer function).
[[nodiscard]] int relative_degree_markov(const StateSpace& sys);

// c (sI - A)^{-1} b as kp Z(s)/P(s) via the Faddeev-LeVerrier resolvent
// expansion; P(s) = det(sI - A) exactly as computed, no pole-zero
// cancellation (see near_cancellations for the diagnostic).
// Throws if the transfer function is identically zero.
[[nodiscard]] RationalTF tf_from_ss(const StateSpace& sys);

// Direct frequency evaluation c (sI - A)^{-1} b by complex linear solve.
[[nodiscard]] std::complex<double> resolvent_response(const StateSpace& sys,
                                                      std::complex<double> s);

// Diagnostic: (zero, pole) pairs closer than tol in the complex plane.
// Uses companion-matrix eigenvalues; diagnostic only, never on the
// stability-checking path.
[[nodiscard]] std::vector<std::pair<std::complex<double>, std::complex<double>>>
near_cancellations(const RationalTF& tf, double tol = 1e-6);

// Characteristic polynomial det(sI - A), monic, via Faddeev-LeVerrier.
[[nodiscard]] Polynomial char_poly(const MatrixXd& A);

// Faddeev-LeVerrier resolvent data:
//   (sI - A)^{-1} = (sum_{k=1..n} N[k-1] s^{n-k}) / den,  den = det(sI - A).
struct ResolventExpansion {
    std::vector<MatrixXd> N;
    Polynomial den;
};
[[nodiscard]] ResolventExpansion resolvent_expansion(const MatrixXd& A);

// Roots via companion-matrix eigenvalues; diagnostic/test helper.
[[nodiscard]] std::vector<std::complex<double>> poly_roots(const Polynomial& p);

}  // namespace mrac
