#pragma once

#include "divlat/divide.hpp"

#include <string>
#include <vector>

namespace divlat {

struct Face {
    std::vector<int> half_edges;  // cyclic, face on the left of each
    bool outer = false;           // contains a boundary arc
    bool region = false;          // bounded, no boundary arc
};

struct FaceSet {
    std::vector<Face> faces;          // the exterior of the disc is excluded
    std::vector<int> face_of;         // per half-edge; -1 on the exterior
    std::vector<std::string> warnings;

    int num_regions() const;
    int quadrant_face(const HalfEdges& he, int dp, int q) const {
        return face_of[he.leaving(dp, q)];
    }
};

// Faces of the planar map completed by virtual boundary arcs. Throws
// DivideError if the divide has no terminals (the outer face is then not
// determined) or if the rotation system fails the disc Euler relation.
// Regions whose boundary revisits a vertex are reported in `warnings`.
FaceSet trace_faces(const Divide& d);

struct SignedDivide {
    Divide divide;
    FaceSet faces;
    std::vector<Sign> sign;  // per face
};

// Checkerboard colouring extending the sign seed.
SignedDivide assign_signs(const Divide& d, const FaceSet& faces);

// Convenience: validate, trace, and colour.
SignedDivide sign_divide(const Divide& d);

struct DivideInvariants {
    int d = 0;
    int r = 0;
    int mu = 0;
    int n_regions = 0;
    int genus = 0;
    int boundary_components = 0;
    int euler_characteristic = 0;
    friend bool operator==(const DivideInvariants&, const DivideInvariants&) = default;
};

DivideInvariants invariants(const SignedDivide& signed_divide);

} // namespace divlat
