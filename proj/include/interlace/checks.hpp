#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "interlace/graph.hpp"

namespace interlace {

/// Outcome of one named identity suite. Suites are deterministic (fixed RNG
/// seeds) and self-contained; detail carries witnesses or counts.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Registered suite names, in run order for "all".
std::vector<std::string> check_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
CheckResult run_check(const std::string& name);

/// Every graph on n vertices named "a","b",... (all 2^(n(n+1)/2) loop/edge
/// patterns).
std::vector<Graph> all_graphs(std::size_t n);

/// Edge/loop bits independently fair coin flips.
Graph random_graph(std::size_t n, std::mt19937& rng);

VertexSet random_subset(const Graph& g, std::mt19937& rng);

}  // namespace interlace
