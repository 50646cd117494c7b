#pragma once

// Geometric divides: integer polylines in a disc centred at the origin,
// turned into combinatorial divides with exact rational arithmetic.

#include "divlat/divide.hpp"

#include <array>
#include <string>
#include <vector>

namespace divlat {

using IntPoint = std::array<long long, 2>;

struct Polyline {
    std::vector<IntPoint> points;
    bool closed = false;
    friend bool operator==(const Polyline&, const Polyline&) = default;
};

struct PolylineDivide {
    std::string name;
    std::vector<Polyline> branches;
    long long disc_radius = 0;
    IntPoint seed_point{0, 0};
    Sign seed_sign = Sign::Minus;
};

// Open polylines must start and end strictly outside the disc with every
// other vertex strictly inside; closed polylines lie strictly inside.
// Double points are named p1, p2, ... in order of first encounter along the
// branches, terminals t1, t2, ... counterclockwise from angle 0, edges e1,
// e2, ... in traversal order. Throws DivideError on triple points,
// tangencies or overlaps, crossings at polyline vertices, and a witness
// point lying on a curve.
Divide ingest_polyline(const PolylineDivide& input);

} // namespace divlat
