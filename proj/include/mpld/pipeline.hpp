#pragma once

#include "mpld/dea_ppm.hpp"
#include "mpld/oracle.hpp"

#include <cstdint>
#include <vector>

namespace mpld {

enum class SolverKind { DeaPpm, Exact };

struct PipelineOptions {
  SolverConfig solver;
  SolverKind kind = SolverKind::DeaPpm;
  std::uint64_t exact_node_limit = 50'000'000;
};

struct ComponentReport {
  int vertices = 0;
  Solution solution;
  int outer_iterations = 0;
  bool proved_optimal = false; // exact solver only
};

struct Decomposition {
  Solution solution; // over every vertex of the input graph
  Simplified simplified;
  std::vector<ComponentReport> components;
  double solve_seconds = 0.0; // wall time spent inside the component solvers
};

/// simplify -> solve every component (seed derived from the run seed and the
/// component index) -> recover hidden vertices -> evaluate on the full graph.
Decomposition decompose(const DecompositionGraph& dg, const PipelineOptions& options);

} // namespace mpld
