#pragma once

#include <stdexcept>
#include <string>

namespace mrac {

// A modeling assumption or design feasibility condition failed
// (non-minimum-phase plant, unobservable pair, relative-degree order, ...).
struct assumption_error : std::runtime_error {
    explicit assumption_error(const std::string& what) : std::runtime_error(what) {}
};

// Scenario text could not be parsed; message names the offending line/key.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mrac
