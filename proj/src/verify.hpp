#pragma once

#include <string>
#include <vector>

#include "simulate.hpp"

namespace mrac {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    bool numeric = false;     // true when value/threshold are meaningful
    double value = 0.0;
    double threshold = 0.0;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::vector<std::string> warnings;
    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] std::string str() const;
};

// Re-derives every checkable property of a computed design from the design
// itself (not from fresh solves): modeling assumptions (minimum phase,
// declared gain sign, reference stability, relative-degree order), design
// polynomial stability, matching residuals, observer pole and frequency
// residuals, and re-assembly of theta*. Conditioning issues and near
// pole-zero cancellations are reported as warnings, not failures.
[[nodiscard]] VerifyReport verify_design(const Wiring& w);

}  // namespace mrac
