#pragma once

#include <string>

#include "scenario.hpp"

namespace mrac {

// Scenario text format: INI-style sections [plant], [reference], [design],
// [adaptation], [sim]; one `key = value` per line; `#` starts a comment.
// Matrices are semicolon-separated rows of comma-separated entries,
// vectors comma-separated, polynomials ascending coefficient lists.
// The reference input is `const <v>` or `sines a1,w1; a2,w2; ...`.
// Parsing is strict: unknown sections or keys, duplicates, malformed
// numbers, and missing required keys all raise parse_error naming the
// line and key. Structural only; call Scenario::validate (or make_wiring)
// for feasibility checks.
[[nodiscard]] Scenario parse_scenario_text(const std::string& text, const std::string& name);

// Reads and parses a scenario file; the scenario name is the file stem.
[[nodiscard]] Scenario load_scenario(const std::string& path);

}  // namespace mrac
