#pragma once

#include "mpld/solver_core.hpp"

#include <cstdint>

namespace mpld {

struct OracleResult {
  Solution optimum;
  std::uint64_t assignments_examined = 0; // search-tree nodes visited
  bool proved_optimal = false;
};

/// Depth-first branch and bound over colorings, vertices ordered by
/// descending combined degree. The partial cost of the colored prefix is the
/// lower bound; color labels are symmetry-broken (a vertex may open at most
/// one new color). Stops after `node_limit` nodes with proved_optimal = false.
OracleResult exact_min_cost(const DecompositionGraph& dg, int k, const StitchWeight& alpha,
                            std::uint64_t node_limit = 50'000'000);

} // namespace mpld
