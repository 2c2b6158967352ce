#pragma once

#include "mpld/solver_core.hpp"

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace mpld {

struct SolverConfig {
  int k = 3;
  StitchWeight alpha;
  int population = 8;
  int max_outer_iters = 500;
  double inherit_rate = 0.5;
  double explore_fraction = 1.0 / 3.0;
  double explore_angle_max = std::numbers::pi / 2.0;
  double refine_rate = 0.25;
  std::uint64_t seed = 0;

  /// Throws ContractViolation when a knob is outside its documented range.
  void validate() const;
};

/// Per-vertex color distributions stored as amplitudes: the probability of
/// color j at vertex v is amplitude(j, v)^2, and each column has unit norm.
class DistributionIndividual {
public:
  DistributionIndividual() = default;
  /// Uniform: every amplitude 1/sqrt(k).
  DistributionIndividual(int n, int k);

  int vertices() const { return n_; }
  int colors() const { return k_; }
  std::span<double> column(int v) {
    return {amp_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  std::span<const double> column(int v) const {
    return {amp_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  double amplitude(Color j, int v) const { return column(v)[static_cast<std::size_t>(j)]; }

  /// Largest |sum_j a^2 - 1| over all columns.
  double max_norm_error() const;

private:
  int n_ = 0;
  int k_ = 0;
  std::vector<double> amp_;
};

DistributionIndividual init_distribution(int n, int k);

/// Per vertex: with probability `inherit_rate` copy the parent's color (when a
/// parent is given), otherwise draw color j with probability amplitude^2.
Assignment sample_solution(const DistributionIndividual& q, const Assignment* parent, double inherit_rate, Rng& rng);

/// Givens rotation of rows (j1, j2) by theta, then absolute value and renormalization.
void rotate_column(std::span<double> column, Color j1, Color j2, double theta);

/// Rotates ceil(n/10) random columns of each of the ceil(np * explore_fraction)
/// individuals whose paired solutions cost the most (ties by lower index).
std::vector<DistributionIndividual> orthogonal_explore(std::vector<DistributionIndividual> q,
                                                       std::span<const Solution> p, const SolverConfig& config,
                                                       Rng& rng);

/// Moves every column toward the color its paired solution chose:
/// p <- (1 - rate) p + rate e_c on squared amplitudes.
std::vector<DistributionIndividual> refine_q(std::span<const Solution> refined, std::vector<DistributionIndividual> q,
                                             double rate);

/// Elite bookkeeping carried across outer iterations, plus the per-call loop
/// counters (exposed for inspection after refine_p returns).
struct RefineState {
  Solution p1;
  Solution p2;
  Solution c1;
  Solution best;
  bool w2 = false;
  int iter = 0;
  int iter_stag = 0;
  std::int64_t tabu_iterations = 0;

  /// p1 = p2 = c1 = best = incumbent, flags cleared.
  static RefineState from_incumbent(const Solution& incumbent);
};

/// Solution-population refinement: crossover with the two elites, tabu search,
/// elite updates, until six consecutive rounds fail to improve p1; then one
/// more tabu pass, after which p1 is the best member.
std::vector<Solution> refine_p(std::vector<Solution> population, RefineState& state, const DecompositionGraph& dg,
                               const SolverConfig& config, Rng& rng);

struct SolveStats {
  int outer_iterations = 0;
  std::vector<std::int64_t> best_cost_trace; // scaled cost of the incumbent after init and each outer iteration
};

/// Full distribution-evolution loop; deterministic for a given config.seed.
Solution solve(const DecompositionGraph& dg, const SolverConfig& config, SolveStats* stats = nullptr);

} // namespace mpld
