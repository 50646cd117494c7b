#pragma once

// Divide files: one JSON object in either "map" or "polyline" mode. The
// grammar is documented in docs/divide-format.md.

#include "divlat/divide.hpp"

#include <optional>
#include <string>
#include <vector>

namespace divlat {

struct ParseOutcome {
    std::optional<Divide> divide;
    std::vector<std::string> diagnostics;
    bool ok() const { return divide.has_value(); }
};

// Never throws; structural problems come back as diagnostics.
ParseOutcome parse_divide(const std::string& text);

// Throwing variant.
Divide read_divide(const std::string& text);

// Map-mode text, deterministic: fixed key order, one edge per line.
std::string write_divide(const Divide& d);

} // namespace divlat
