#pragma once

// Relative classes dual to the vanishing cycles, their variation images,
// the Euler matrix of the collection and depth-one cones.

#include "divlat/ag_diagram.hpp"
#include "divlat/lattice.hpp"

#include <string>
#include <vector>

namespace divlat {

using IntVector = std::vector<Int>;

// a_j[m] = K_j . V_m
std::vector<IntVector> adapted_vectors(const MilnorLattice& lat);

// Track K + sum c_m V_m through the twists, last basis element first, and
// return the final c.
IntVector pl_variation(const IntVector& a, const MilnorLattice& lat);

struct VariationVerdict {
    int index = 0;
    bool pass = false;
    IntVector image;
};

std::vector<VariationVerdict> verify_adapted(const std::vector<IntVector>& family, const MilnorLattice& lat);

struct Arrow {
    int from = 0;  // order indices, from < to
    int to = 0;
    Int value;     // signed matrix entry
};

struct EulerQuiver {
    IntMatrix E;
    int sigma = 1;
    std::vector<Arrow> arrows;
    // sign of the strictly upper nonzero entries: +1, -1, or 0 if mixed/none
    int upper_sign = 0;
};

EulerQuiver euler_matrix(const MilnorLattice& lat);

struct Certificate {
    bool pass = false;
    std::vector<std::string> violations;
};

Certificate exceptional_certificate(const IntMatrix& E, const AGDiagram& ag);

struct ConeRecord {
    int vertex = -1;
    int partner = -1;
    IntVector a_prime;
    IntVector a_partner;
    IntVector var_prime;
    IntVector var_total;
    int components = 0;
    bool splits_adapted = false;  // a_prime + a_partner = a_vertex
    bool pass = false;
};

// Throws std::invalid_argument if v is not depth one or has no depth-zero
// neighbour.
ConeRecord depth1_cone(const AGDiagram& ag, const DepthLabels& depths, const MilnorLattice& lat, int v);

std::string quiver_dot(const EulerQuiver& q, const AGDiagram& ag);

} // namespace divlat
