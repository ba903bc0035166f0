#include "transfer_function.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace mrac {

void RationalTF::validate() const {
    if (!Z.is_monic() || !P.is_monic())
        throw std::invalid_argument("transfer function: Z and P must be monic");
    if (Z.degree() > P.degree())
        throw std::invalid_argument("transfer function: deg(Z) must not exceed deg(P)");
    if (kp == 0.0 || !std::isfinite(kp))
        throw std::invalid_argument("transfer function: gain must be finite and nonzero");
}

int relative_degree(const RationalTF& tf) {
    return tf.P.degree() - tf.Z.degree();
}

int relative_degree_markov(const StateSpace& sys) {
    sys.validate();
    const int n = sys.n();
    const double anorm = std::max(1.0, sys.A.norm());
    const double scale = sys.b.norm() * sys.c.norm();
    VectorXd v = sys.b;
    double apow = 1.0;
    for (int i = 0; i < n; ++i) {
        const double markov = sys.c * v;
        if (std::abs(markov) > 1e-10 * apow * scale) return i + 1;
        v = sys.A * v;
        apow *= anorm;
    }
    return 0;
}

ResolventExpansion resolvent_expansion(const MatrixXd& A) {
    const int n = static_cast<int>(A.rows());
    std::vector<double> den(n + 1, 0.0);
    den[n] = 1.0;
    ResolventExpansion out;
    out.N.reserve(n);
    MatrixXd N = MatrixXd::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        out.N.push_back(N);
        const MatrixXd AN = A * N;
        const double a = -AN.trace() / k;
        den[n - k] = a;
        N = AN + a * MatrixXd::Identity(n, n);
    }
    out.den = Polynomial(std::move(den));
    return out;
}

Polynomial char_poly(const MatrixXd& A) {
    return resolvent_expansion(A).den;
}

RationalTF tf_from_ss(const StateSpace& sys) {
    sys.validate();
    const int n = sys.n();

    // The numerator coefficient of s^{n-k} is c N_k b.
    const ResolventExpansion rex = resolvent_expansion(sys.A);
    std::vector<double> num(n, 0.0);
    for (int k = 1; k <= n; ++k) num[n - k] = sys.c * rex.N[k - 1] * sys.b;

    // The true numerator degree is n - n*; coefficients above it are
    // rounding residue of exactly-zero Markov parameters.
    const int nstar = relative_degree_markov(sys);
    if (nstar == 0)
        throw std::invalid_argument("degenerate plant: transfer function is identically zero");
    for (int j = n - nstar + 1; j < n; ++j) num[j] = 0.0;

    RationalTF tf;
    tf.kp = num[n - nstar];
    std::vector<double> z(num.begin(), num.begin() + (n - nstar + 1));
    for (double& v : z) v /= tf.kp;
    z.back() = 1.0;
    tf.Z = Polynomial(std::move(z));
    tf.P = rex.den;
    tf.validate();
    return tf;
}

std::complex<double> resolvent_response(const StateSpace& sys, std::complex<double> s) {
    const int n = sys.n();
    Eigen::MatrixXcd M = s * Eigen::MatrixXcd::Identity(n, n) - sys.A.cast<std::complex<double>>();
    Eigen::VectorXcd x = M.partialPivLu().solve(sys.b.cast<std::complex<double>>());
    return (sys.c.cast<std::complex<double>>() * x)(0);
}

std::vector<std::complex<double>> poly_roots(const Polynomial& p) {
    const Polynomial m = p.monic();
    const int d = m.degree();
    if (d == 0) return {};
    MatrixXd C = MatrixXd::Zero(d, d);
    for (int i = 0; i + 1 < d; ++i) C(i, i + 1) = 1.0;
    for (int j = 0; j < d; ++j) C(d - 1, j) = -m.coeffs()[j];
    Eigen::EigenSolver<MatrixXd> es(C, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

std::vector<std::pair<std::complex<double>, std::complex<double>>>
near_cancellations(const RationalTF& tf, double tol) {
    std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs;
    if (tf.Z.degree() == 0) return pairs;
    const auto zeros = poly_roots(tf.Z);
    const auto poles = poly_roots(tf.P);
    for (const auto& z : zeros)
        for (const auto& p : poles)
            if (std::abs(z - p) < tol) pairs.emplace_back(z, p);
    return pairs;
}

}  // namespace mrac
