#pragma once

#include "divlat/corpus.hpp"
#include "divlat/report.hpp"

#include <string>
#include <vector>

namespace divlat {

// Mismatches between a pipeline run and the entry's published facts.
std::vector<std::string> check_expected(const ExpectedFacts& x, const PipelineResult& r);

} // namespace divlat
