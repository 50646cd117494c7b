#pragma once

// Built-in divides with their published facts.

#include "divlat/divide.hpp"
#include "divlat/polyline.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace divlat {

struct ExpectedFacts {
    int d = 0;
    int r = 0;
    int mu = 0;
    int n_minus = 0;
    int n_zero = 0;
    int n_plus = 0;
    int genus = 0;
    int boundary = 0;
    int diagram_depth = 0;
    std::vector<std::string> depth_one;  // labels of the depth-1 vertices
    // diagram edges as label pairs, all multiplicity 1; empty optional = unchecked
    std::optional<std::vector<std::pair<std::string, std::string>>> ag_edges;
    // Euler quiver arrows as 1-based order indices
    std::optional<std::vector<std::pair<int, int>>> arrows;
    std::vector<std::string> sources;
};

struct CorpusEntry {
    std::string name;
    Divide divide;
    ExpectedFacts expected;
};

// Two-strand braid with ceil(n/2) crossings; n even closes the left end
// with a cap, n odd leaves four terminals.
CorpusEntry gen_a(int n);
CorpusEntry gen_e6();
CorpusEntry gen_depth1();

PolylineDivide e6_polyline();
PolylineDivide depth1_polyline();
// Geometric twin of gen_a(4), used to cross-check polyline ingestion.
PolylineDivide a4_polyline();

// Built-in entries: A_1..A_max_n, E6, depth1.
std::vector<CorpusEntry> builtin_corpus(int max_n = 12);

// Renumber edges in strand traversal order (terminals first, then circles)
// and orient each along its strand; the sign seed follows its edge.
Divide orient_by_traversal(const Divide& d);

} // namespace divlat
