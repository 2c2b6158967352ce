#pragma once

#include "mpld/decomp_graph.hpp"
#include "mpld/random.hpp"
#include "mpld/weight.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mpld {

/// A complete coloring with its exact conflict/stitch counts.
/// `scaled_cost` is StitchWeight::scaled(conflicts, stitches) for the weight
/// the solution was evaluated under; solutions compare through it.
struct Solution {
  Assignment colors;
  std::int64_t conflicts = 0;
  std::int64_t stitches = 0;
  std::int64_t scaled_cost = 0;

  bool better_than(const Solution& other) const { return scaled_cost < other.scaled_cost; }
};

/// Counts monochrome conflict edges and bichrome stitch edges from scratch.
/// Throws ContractViolation on size mismatch or a color outside [0, k).
Solution evaluate(const DecompositionGraph& dg, Assignment colors, int k, const StitchWeight& alpha);

struct Move {
  int vertex = -1;
  Color from = 0;
  Color to = 0;
  std::int64_t delta_conflicts = 0;
  std::int64_t delta_stitches = 0;
};

/// Effect of recoloring `v` to `to`, from v's incident edges only.
Move delta_evaluate(const DecompositionGraph& dg, const Solution& solution, int v, Color to);

/// Applies `move` and its deltas to `solution` in place.
void apply_move(Solution& solution, const Move& move, const StitchWeight& alpha);

/// k x n matrix of tenures; recoloring v to j is forbidden while count < at(j, v).
class TabuList {
public:
  TabuList(int k, int n) : k_(k), tenure_(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), 0) {}

  std::int64_t at(Color j, int v) const { return tenure_[index(j, v)]; }
  void set(Color j, int v, std::int64_t until) { tenure_[index(j, v)] = until; }
  bool forbidden(Color j, int v, std::int64_t count) const { return count < at(j, v); }

private:
  std::size_t index(Color j, int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j);
  }
  int k_;
  std::vector<std::int64_t> tenure_;
};

/// count + floor(0.6 * (10 * conflicts + stitches)) + r, in exact integer arithmetic.
std::int64_t tabu_tenure(std::int64_t count, std::int64_t conflicts, std::int64_t stitches, std::int64_t r);

struct TabuOutcome {
  Solution best;
  std::int64_t iterations = 0;
};

/// Tabu search over single-vertex recolorings of vertices incident to a
/// violated edge. Stops at cost 0 or after `budget` iterations (default 5n).
/// Never returns a solution worse than `start`.
TabuOutcome tabu_search(const DecompositionGraph& dg, const Solution& start, int k, const StitchWeight& alpha,
                        Rng& rng, std::optional<std::int64_t> budget = std::nullopt);

/// Greedy partition crossover over parents (first, second, third): color class
/// c is the largest still-unassigned class of parent c mod 3; leftovers are
/// colored uniformly at random.
Assignment mgpx(std::span<const Color> first, std::span<const Color> second, std::span<const Color> third, int k,
                Rng& rng);

} // namespace mpld
