#pragma once

#include "polynomial.hpp"

namespace mrac {

// True iff all roots of p lie strictly in the open left half plane.
// Routh-Hurwitz table, no root finding. First-column entries within
// 1e-12 of zero (relative to the table's running magnitude) and
// all-zero rows count as NOT Hurwitz: marginal polynomials are rejected.
[[nodiscard]] bool is_hurwitz(const Polynomial& p);

}  // namespace mrac
