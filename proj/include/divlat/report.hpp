#pragma once

// Full pipeline from a divide to the consolidated report.

#include "divlat/adapted.hpp"
#include "divlat/ag_diagram.hpp"
#include "divlat/divide.hpp"
#include "divlat/faces.hpp"
#include "divlat/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace divlat {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct PipelineOptions {
    std::vector<std::string> vertex_order;  // empty: declaration order
    unsigned max_power = 60;
};

struct PipelineResult {
    Divide divide;
    SignedDivide signed_divide;
    DivideInvariants invariants;
    std::vector<std::string> warnings;
    AGDiagram ag;
    std::vector<bool> exposed;
    DepthLabels depths;
    MilnorLattice lattice;
    MonodromyPair monodromy;
    std::vector<Check> suite;
    CharPolyOrder desc_poly;
    CharPolyOrder asc_poly;
    std::vector<IntVector> family;
    std::vector<VariationVerdict> variation;
    EulerQuiver euler;
    Certificate certificate;
    std::vector<ConeRecord> cones;
    std::vector<std::string> failures;

    bool all_pass() const { return failures.empty(); }
};

// Throws DivideError on structural problems and std::invalid_argument on a
// bad vertex order. Failed identities land in `failures`; every stage runs.
PipelineResult run_pipeline(const Divide& d, const PipelineOptions& options = {});

std::string sha256_hex(const std::string& bytes);

// Deterministic JSON text.
std::string report_json(const PipelineResult& r, const std::string& input_digest);

// One CSV per matrix: I, S, M_desc, M_asc, rho_S, E. Throws
// std::runtime_error on I/O failure.
void write_csv_dir(const PipelineResult& r, const std::string& dir);

std::string matrix_csv(const IntMatrix& m);

} // namespace divlat
