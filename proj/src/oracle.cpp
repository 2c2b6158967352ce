#include "mpld/oracle.hpp"

#include "mpld/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mpld {

namespace {

class BranchAndBound {
public:
  BranchAndBound(const DecompositionGraph& dg, int k, const StitchWeight& alpha, std::uint64_t node_limit)
      : dg_(dg), k_(k), alpha_(alpha), node_limit_(node_limit), order_(static_cast<std::size_t>(dg.size())),
        colors_(static_cast<std::size_t>(dg.size()), kUncolored) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return dg.degree(a) > dg.degree(b); });
  }

  OracleResult run() {
    // Seed the incumbent with the all-zero coloring so pruning starts immediately.
    best_ = evaluate(dg_, Assignment(static_cast<std::size_t>(dg_.size()), 0), k_, alpha_);
    descend(0, 0, 0, 0);
    OracleResult r;
    r.optimum = best_;
    r.assignments_examined = nodes_;
    r.proved_optimal = !aborted_;
    return r;
  }

private:
  void descend(std::size_t depth, int colors_open, std::int64_t conflicts, std::int64_t stitches) {
    if (aborted_) return;
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return;
    }
    if (alpha_.scaled(conflicts, stitches) >= best_.scaled_cost) return;
    if (depth == order_.size()) {
      best_.colors = colors_;
      best_.conflicts = conflicts;
      best_.stitches = stitches;
      best_.scaled_cost = alpha_.scaled(conflicts, stitches);
      return;
    }
    const int v = order_[depth];
    const int limit = std::min(k_, colors_open + 1);
    for (Color c = 0; c < limit; ++c) {
      std::int64_t dc = 0;
      std::int64_t ds = 0;
      for (int u : dg_.conflict_neighbors(v)) dc += colors_[static_cast<std::size_t>(u)] == c;
      for (int u : dg_.stitch_neighbors(v)) {
        const Color cu = colors_[static_cast<std::size_t>(u)];
        ds += cu != kUncolored && cu != c;
      }
      colors_[static_cast<std::size_t>(v)] = c;
      descend(depth + 1, std::max(colors_open, c + 1), conflicts + dc, stitches + ds);
      colors_[static_cast<std::size_t>(v)] = kUncolored;
      if (aborted_) return;
    }
  }

  const DecompositionGraph& dg_;
  int k_;
  StitchWeight alpha_;
  std::uint64_t node_limit_;
  std::vector<int> order_;
  Assignment colors_;
  Solution best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

} // namespace

OracleResult exact_min_cost(const DecompositionGraph& dg, int k, const StitchWeight& alpha, std::uint64_t node_limit) {
  require(k >= 1, "exact_min_cost: k must be positive");
  if (dg.size() == 0) {
    OracleResult r;
    r.proved_optimal = true;
    return r;
  }
  return BranchAndBound(dg, k, alpha, node_limit).run();
}

} // namespace mpld
