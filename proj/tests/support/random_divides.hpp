#pragma once

// Random valid divides for the property suite: straight-line arrangements,
// bent open polylines, and the A_n family with a random seed sign.

#include "divlat/divide.hpp"
#include "divlat/polyline.hpp"

#include <optional>
#include <random>

namespace randdiv {

using Rng = std::mt19937_64;

// One attempt each; nullopt when the sample is degenerate or disconnected.
std::optional<divlat::Divide> line_arrangement(Rng& rng);
std::optional<divlat::Divide> bent_polylines(Rng& rng);

// Retries until something valid comes out. Mixes the three families.
divlat::Divide any(Rng& rng);

} // namespace randdiv
