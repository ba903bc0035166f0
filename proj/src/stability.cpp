#include "stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mrac {

namespace {
constexpr double kZeroTol = 1e-12;

double row_scale(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 1.0;
    for (double v : a) m = std::max(m, std::abs(v));
    for (double v : b) m = std::max(m, std::abs(v));
    return m;
}
}  // namespace

bool is_hurwitz(const Polynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("is_hurwitz needs degree >= 1");
    if (p.leading() == 0.0) throw std::invalid_argument("is_hurwitz: zero leading coefficient");

    // Normalize: positive leading coefficient, coefficients scaled to unit max.
    std::vector<double> c(p.coeffs().rbegin(), p.coeffs().rend());  // descending
    const double sign = c[0] > 0 ? 1.0 : -1.0;
    double mx = 0.0;
    for (double v : c) mx = std::max(mx, std::abs(v));
    for (double& v : c) v *= sign / mx;

    const int m = p.degree();
    std::vector<double> prev, cur;
    for (int j = 0; j <= m; j += 2) prev.push_back(c[j]);
    for (int j = 1; j <= m; j += 2) cur.push_back(c[j]);
    if (cur.empty()) cur.push_back(0.0);

    // prev/cur first columns must stay strictly positive through all m+1 rows.
    if (prev[0] <= kZeroTol) return false;
    for (int row = 1; row <= m; ++row) {
        const double tol = kZeroTol * row_scale(prev, cur);
        if (!(cur[0] > tol)) return false;  // zero, negative, or non-finite pivot
        if (row == m) break;
        std::vector<double> next(std::max<size_t>(cur.size(), 1), 0.0);
        bool all_zero = true;
        for (size_t j = 0; j + 1 <= prev.size(); ++j) {
            const double a = (j + 1 < prev.size()) ? prev[j + 1] : 0.0;
            const double b = (j + 1 < cur.size()) ? cur[j + 1] : 0.0;
            const double v = (cur[0] * a - prev[0] * b) / cur[0];
            if (j < next.size()) next[j] = v;
            if (std::abs(v) > tol) all_zero = false;
        }
        if (all_zero) return false;  // auxiliary-polynomial case: roots on the axis
        prev = std::move(cur);
        cur = std::move(next);
    }
    return true;
}

}  // namespace mrac
