#include "filters.hpp"

#include <stdexcept>

#include "errors.hpp"
#include "stability.hpp"

namespace mrac {

namespace {

// Controllable-canonical companion pair for a monic denominator: with input u,
// state 0 carries 1/denom[u] and state i carries s^i/denom[u].
void companion_pair(const Polynomial& denom, const char* what, MatrixXd& A, VectorXd& b) {
    const int m = denom.degree();
    if (m < 1)
        throw std::invalid_argument(std::string(what) + ": denominator must have degree >= 1");
    if (!denom.is_monic())
        throw std::invalid_argument(std::string(what) + ": denominator must be monic");
    if (!is_hurwitz(denom))
        throw assumption_error(std::string(what) + ": denominator is not Hurwitz, filter would be unstable");

    A = MatrixXd::Zero(m, m);
    for (int i = 0; i + 1 < m; ++i) A(i, i + 1) = 1.0;
    for (int j = 0; j < m; ++j) A(m - 1, j) = -denom.coeffs()[j];
    b = VectorXd::Zero(m);
    b(m - 1) = 1.0;
}

}  // namespace

FilterBank realize_filter_bank(const Polynomial& lambda) {
    FilterBank f;
    companion_pair(lambda, "realize_filter_bank", f.A, f.b);
    return f;
}

VectorFilter realize_wm(const Polynomial& pm, int q) {
    if (q < 1)
        throw std::invalid_argument("realize_wm: channel count must be >= 1");
    VectorFilter f;
    companion_pair(pm, "realize_wm", f.A, f.b);
    f.channels = q;
    return f;
}

}  // namespace mrac
