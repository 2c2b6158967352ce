#include "mpld/solver_core.hpp"

#include "mpld/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace mpld {

Solution evaluate(const DecompositionGraph& dg, Assignment colors, int k, const StitchWeight& alpha) {
  require(static_cast<int>(colors.size()) == dg.size(), "evaluate: assignment size does not match graph");
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 0 || colors[v] >= k) {
      throw ContractViolation("evaluate: vertex " + std::to_string(v) + " has color " + std::to_string(colors[v]) +
                              " outside [0, " + std::to_string(k) + ")");
    }
  }
  Solution s;
  for (const auto& [u, v] : dg.conflict_edges()) {
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) ++s.conflicts;
  }
  for (const auto& [u, v] : dg.stitch_edges()) {
    if (colors[static_cast<std::size_t>(u)] != colors[static_cast<std::size_t>(v)]) ++s.stitches;
  }
  s.scaled_cost = alpha.scaled(s.conflicts, s.stitches);
  s.colors = std::move(colors);
  return s;
}

Move delta_evaluate(const DecompositionGraph& dg, const Solution& solution, int v, Color to) {
  const Color from = solution.colors[static_cast<std::size_t>(v)];
  require(to != from, "delta_evaluate: target color equals current color");
  Move m{v, from, to, 0, 0};
  for (int u : dg.conflict_neighbors(v)) {
    const Color cu = solution.colors[static_cast<std::size_t>(u)];
    m.delta_conflicts += (cu == to) - (cu == from);
  }
  for (int u : dg.stitch_neighbors(v)) {
    const Color cu = solution.colors[static_cast<std::size_t>(u)];
    // bichrome before: cu != from; after: cu != to
    m.delta_stitches += (cu != to) - (cu != from);
  }
  return m;
}

void apply_move(Solution& solution, const Move& move, const StitchWeight& alpha) {
  solution.colors[static_cast<std::size_t>(move.vertex)] = move.to;
  solution.conflicts += move.delta_conflicts;
  solution.stitches += move.delta_stitches;
  solution.scaled_cost = alpha.scaled(solution.conflicts, solution.stitches);
}

std::int64_t tabu_tenure(std::int64_t count, std::int64_t conflicts, std::int64_t stitches, std::int64_t r) {
  // floor(0.6 * x) == (3 * x) / 5 for x >= 0
  return count + (3 * (10 * conflicts + stitches)) / 5 + r;
}

namespace {

// Per-vertex color histograms of CE and SE neighbors plus the set of vertices
// touching a violated edge, kept in sync with the working coloring.
class MoveTables {
public:
  MoveTables(const DecompositionGraph& dg, const Assignment& colors, int k)
      : dg_(dg), k_(k), colors_(colors),
        conflict_hist_(static_cast<std::size_t>(dg.size()) * static_cast<std::size_t>(k), 0),
        stitch_hist_(static_cast<std::size_t>(dg.size()) * static_cast<std::size_t>(k), 0),
        position_(static_cast<std::size_t>(dg.size()), -1) {
    for (int v = 0; v < dg.size(); ++v) {
      for (int u : dg.conflict_neighbors(v)) ++conflict_hist_[slot(v, color(u))];
      for (int u : dg.stitch_neighbors(v)) ++stitch_hist_[slot(v, color(u))];
    }
    for (int v = 0; v < dg.size(); ++v) refresh(v);
  }

  const std::vector<int>& critical() const { return critical_; }
  Color color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
  const Assignment& colors() const { return colors_; }

  const int* conflict_row(int v) const { return conflict_hist_.data() + slot(v, 0); }
  const int* stitch_row(int v) const { return stitch_hist_.data() + slot(v, 0); }

  std::int64_t delta_conflicts(int v, Color to) const {
    return conflict_hist_[slot(v, to)] - conflict_hist_[slot(v, color(v))];
  }
  std::int64_t delta_stitches(int v, Color to) const {
    return stitch_hist_[slot(v, color(v))] - stitch_hist_[slot(v, to)];
  }

  void recolor(int v, Color to) {
    const Color from = color(v);
    colors_[static_cast<std::size_t>(v)] = to;
    for (int u : dg_.conflict_neighbors(v)) {
      --conflict_hist_[slot(u, from)];
      ++conflict_hist_[slot(u, to)];
      refresh(u);
    }
    for (int u : dg_.stitch_neighbors(v)) {
      --stitch_hist_[slot(u, from)];
      ++stitch_hist_[slot(u, to)];
      refresh(u);
    }
    refresh(v);
  }

private:
  std::size_t slot(int v, Color c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c);
  }

  bool violated(int v) const {
    const Color c = color(v);
    return conflict_hist_[slot(v, c)] > 0 ||
           stitch_hist_[slot(v, c)] < static_cast<int>(dg_.stitch_neighbors(v).size());
  }

  void refresh(int v) {
    auto& pos = position_[static_cast<std::size_t>(v)];
    const bool now = violated(v);
    if (now && pos < 0) {
      pos = static_cast<int>(critical_.size());
      critical_.push_back(v);
    } else if (!now && pos >= 0) {
      const int last = critical_.back();
      critical_[static_cast<std::size_t>(pos)] = last;
      position_[static_cast<std::size_t>(last)] = pos;
      critical_.pop_back();
      pos = -1;
    }
  }

  const DecompositionGraph& dg_;
  int k_;
  Assignment colors_;
  std::vector<int> conflict_hist_;
  std::vector<int> stitch_hist_;
  std::vector<int> position_;
  std::vector<int> critical_;
};

} // namespace

TabuOutcome tabu_search(const DecompositionGraph& dg, const Solution& start, int k, const StitchWeight& alpha,
                        Rng& rng, std::optional<std::int64_t> budget) {
  require(static_cast<int>(start.colors.size()) == dg.size(), "tabu_search: solution does not match graph");
  const std::int64_t limit = budget.value_or(5 * static_cast<std::int64_t>(dg.size()));

  TabuOutcome out{start, 0};
  if (start.scaled_cost == 0 || limit <= 0) return out;

  MoveTables tables(dg, start.colors, k);
  TabuList tabu(k, dg.size());
  std::int64_t y_conflicts = start.conflicts;
  std::int64_t y_stitches = start.stitches;
  std::uniform_int_distribution<std::int64_t> draw_r(1, 10);

  std::vector<Move> ties;
  std::int64_t count = 0;
  while (out.best.scaled_cost > 0 && count < limit) {
    // Best move by (scaled cost delta, conflict delta); uniform among ties.
    std::int64_t best_key = std::numeric_limits<std::int64_t>::max();
    std::int64_t best_conf = std::numeric_limits<std::int64_t>::max();
    ties.clear();
    for (bool respect_tabu : {true, false}) {
      for (int v : tables.critical()) {
        const Color from = tables.color(v);
        const int* conflicts_by_color = tables.conflict_row(v);
        const int* stitches_by_color = tables.stitch_row(v);
        for (Color j = 0; j < k; ++j) {
          if (j == from) continue;
          if (respect_tabu && tabu.forbidden(j, v, count)) continue;
          const std::int64_t dc = conflicts_by_color[j] - conflicts_by_color[from];
          const std::int64_t ds = stitches_by_color[from] - stitches_by_color[j];
          const auto key = alpha.scaled(dc, ds);
          if (key < best_key || (key == best_key && dc < best_conf)) {
            best_key = key;
            best_conf = dc;
            ties.clear();
          } else if (key != best_key || dc != best_conf) {
            continue;
          }
          ties.push_back(Move{v, from, j, dc, ds});
        }
      }
      if (!ties.empty()) break; // every candidate tabu: waive the restriction once
    }
    if (ties.empty()) break;  // no violated vertex left
    const Move chosen =
        ties.size() == 1 ? ties.front()
                         : ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];

    tables.recolor(chosen.vertex, chosen.to);
    y_conflicts += chosen.delta_conflicts;
    y_stitches += chosen.delta_stitches;
    tabu.set(chosen.from, chosen.vertex, tabu_tenure(count, y_conflicts, y_stitches, draw_r(rng)));
    if (alpha.scaled(y_conflicts, y_stitches) < out.best.scaled_cost) {
      out.best.colors = tables.colors();
      out.best.conflicts = y_conflicts;
      out.best.stitches = y_stitches;
      out.best.scaled_cost = alpha.scaled(y_conflicts, y_stitches);
    }
    ++count;
  }
  out.iterations = count;
  return out;
}

Assignment mgpx(std::span<const Color> first, std::span<const Color> second, std::span<const Color> third, int k,
                Rng& rng) {
  const std::size_t n = first.size();
  require(second.size() == n && third.size() == n, "mgpx: parents differ in length");
  const std::array<std::span<const Color>, 3> parents{first, second, third};
  for (const auto& parent : parents) {
    for (Color c : parent) require(c >= 0 && c < k, "mgpx: parent color out of range");
  }

  Assignment child(n, kUncolored);
  std::vector<std::size_t> class_size(static_cast<std::size_t>(k));
  for (Color c = 0; c < k; ++c) {
    const auto& parent = parents[static_cast<std::size_t>(c) % parents.size()];
    std::fill(class_size.begin(), class_size.end(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (child[v] == kUncolored) ++class_size[static_cast<std::size_t>(parent[v])];
    }
    const auto largest = static_cast<Color>(std::max_element(class_size.begin(), class_size.end()) - class_size.begin());
    if (class_size[static_cast<std::size_t>(largest)] == 0) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (child[v] == kUncolored && parent[v] == largest) child[v] = c;
    }
  }
  std::uniform_int_distribution<Color> any_color(0, k - 1);
  for (auto& c : child) {
    if (c == kUncolored) c = any_color(rng);
  }
  return child;
}

} // namespace mpld
