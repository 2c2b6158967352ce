#include "mpld/pipeline.hpp"

#include "mpld/random.hpp"

#include <chrono>

namespace mpld {

Decomposition decompose(const DecompositionGraph& dg, const PipelineOptions& options) {
  options.solver.validate();
  const int k = options.solver.k;
  Decomposition out;
  out.simplified = simplify(dg, k);

  std::vector<Assignment> colorings;
  colorings.reserve(out.simplified.components.size());
  double seconds = 0.0;
  for (std::size_t c = 0; c < out.simplified.components.size(); ++c) {
    const auto& graph = out.simplified.components[c].graph;
    ComponentReport report;
    report.vertices = graph.size();
    const auto start = std::chrono::steady_clock::now();
    if (options.kind == SolverKind::Exact) {
      auto result = exact_min_cost(graph, k, options.solver.alpha, options.exact_node_limit);
      report.solution = std::move(result.optimum);
      report.proved_optimal = result.proved_optimal;
    } else {
      SolverConfig config = options.solver;
      config.seed = derive_seed(options.solver.seed, c);
      SolveStats stats;
      report.solution = solve(graph, config, &stats);
      report.outer_iterations = stats.outer_iterations;
    }
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    colorings.push_back(report.solution.colors);
    out.components.push_back(std::move(report));
  }
  out.solve_seconds = seconds;

  auto merged = merge_components(dg, out.simplified.components, colorings);
  auto full = recover(std::move(merged), out.simplified.stack, dg, k);
  out.solution = evaluate(dg, std::move(full), k, options.solver.alpha);
  return out;
}

} // namespace mpld
