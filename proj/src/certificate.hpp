#pragma once

#include <map>
#include <string>
#include <vector>

#include "simulate.hpp"

namespace mrac {

// Text certificate of a computed design: leading '#' lines carry a
// 6-digit human summary, the rest is a machine block of `key = value`
// lines at 17 significant digits (vectors comma-joined, matrices with
// semicolon-separated rows) for lossless round-trips.
[[nodiscard]] std::string design_certificate(const Wiring& w);

// Reads a machine block back: skips '#' comments and blank lines, splits
// each remaining line at the first '='. Throws parse_error on lines that
// do not fit that shape.
[[nodiscard]] std::map<std::string, std::string> parse_key_values(const std::string& text);

// Comma-separated doubles, strict; for consuming certificate vectors.
[[nodiscard]] std::vector<double> parse_csv_numbers(const std::string& text);

}  // namespace mrac
