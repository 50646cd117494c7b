#pragma once

// Saddle/region diagram of a signed divide.

#include "divlat/faces.hpp"

#include <string>
#include <vector>

namespace divlat {

enum class VertexType { Minus = 0, Zero = 1, Plus = 2 };

char type_char(VertexType t);

struct AGVertex {
    std::string id;      // double point id, or "f<k>" for region face k (1-based)
    VertexType type = VertexType::Zero;
    int source = -1;     // double point index or face index
    std::string label;   // positional: V-_1, V0_2, V+_1, ...
    friend bool operator==(const AGVertex&, const AGVertex&) = default;
};

struct AGEdge {
    int u = -1;  // order indices, u < v
    int v = -1;
    int multiplicity = 0;
    friend bool operator==(const AGEdge&, const AGEdge&) = default;
};

struct AGDiagram {
    std::vector<AGVertex> vertices;  // - block, then 0 block, then + block
    std::vector<AGEdge> edges;       // sorted by (u, v)

    int size() const { return static_cast<int>(vertices.size()); }
    int count(VertexType t) const;
    int index_of(const std::string& id_or_label) const;  // -1 if absent
    int multiplicity(int i, int j) const;
    std::vector<std::vector<int>> adjacency() const;
    friend bool operator==(const AGDiagram&, const AGDiagram&) = default;
};

// Regions are numbered by first appearance when scanning double points in
// order and their quadrants 0..3.
AGDiagram build_ag(const SignedDivide& s);

// New vertex order given as ids or labels. Throws std::invalid_argument if
// `order` is not a permutation or mixes the type blocks.
AGDiagram reorder(const AGDiagram& ag, const std::vector<std::string>& order);

// Order-index permutation taking `from` to `to` (to.vertices[k] is
// from.vertices[perm[k]]), matched on ids.
std::vector<std::size_t> vertex_permutation(const AGDiagram& from, const AGDiagram& to);

// Per vertex: touches a face containing a boundary arc.
std::vector<bool> exposure_set(const SignedDivide& s, const AGDiagram& ag);

struct DepthLabels {
    std::vector<int> depth;
    int diagram_depth = 0;
    friend bool operator==(const DepthLabels&, const DepthLabels&) = default;
};

// Breadth-first distance to the exposed set. Throws std::invalid_argument
// on an empty exposed set or an unreachable vertex.
DepthLabels depth_labels(const AGDiagram& ag, const std::vector<bool>& exposed);

std::string to_dot(const AGDiagram& ag, const DepthLabels& depths);

} // namespace divlat
