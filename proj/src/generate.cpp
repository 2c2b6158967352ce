#include "mpld/generate.hpp"

#include "mpld/errors.hpp"
#include "mpld/random.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mpld {

DecompositionGraph random_graph(const GraphParams& params) {
  const std::int64_t n = params.vertices;
  if (n < 0) throw ParseError("generate: vertex count must be non-negative");
  if (params.conflict_edges < 0 || params.stitch_edges < 0) throw ParseError("generate: edge counts must be non-negative");
  const std::int64_t chain = std::max<std::int64_t>(0, n - 1);
  if (params.stitch_edges > chain) {
    throw ParseError("generate: at most " + std::to_string(chain) + " stitch edges fit " + std::to_string(n) + " vertices");
  }
  const std::int64_t pairs = n * (n - 1) / 2;
  if (params.conflict_edges > pairs - params.stitch_edges) {
    throw ParseError("generate: " + std::to_string(params.conflict_edges) + " conflict edges exceed the " +
                     std::to_string(pairs - params.stitch_edges) + " free vertex pairs");
  }

  Rng rng(mix_seed(params.seed));
  std::vector<int> starts(static_cast<std::size_t>(chain));
  for (std::size_t i = 0; i < starts.size(); ++i) starts[i] = static_cast<int>(i);
  std::shuffle(starts.begin(), starts.end(), rng);
  starts.resize(static_cast<std::size_t>(params.stitch_edges));
  std::sort(starts.begin(), starts.end());

  std::set<Edge> taken;
  std::vector<Edge> se;
  for (int s : starts) {
    se.emplace_back(s, s + 1);
    taken.emplace(s, s + 1);
  }

  std::vector<Edge> ce;
  const std::int64_t free_pairs = pairs - params.stitch_edges;
  if (2 * params.conflict_edges <= free_pairs) {
    std::uniform_int_distribution<int> vertex(0, static_cast<int>(n) - 1);
    std::set<Edge> chosen;
    while (static_cast<std::int64_t>(chosen.size()) < params.conflict_edges) {
      int u = vertex(rng);
      int v = vertex(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (taken.count({u, v}) != 0) continue;
      chosen.emplace(u, v);
    }
    ce.assign(chosen.begin(), chosen.end());
  } else {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (taken.count({u, v}) == 0) ce.emplace_back(u, v);
      }
    }
    std::shuffle(ce.begin(), ce.end(), rng);
    ce.resize(static_cast<std::size_t>(params.conflict_edges));
    std::sort(ce.begin(), ce.end());
  }
  return DecompositionGraph(static_cast<int>(n), std::move(ce), std::move(se));
}

Layout random_layout(const LayoutParams& p) {
  if (p.rects < 0) throw ParseError("generate: rectangle count must be non-negative");
  if (p.wire_width <= 0 || p.track_pitch < p.wire_width) {
    throw ParseError("generate: need 0 < wire width <= track pitch");
  }
  if (p.min_length <= 0 || p.max_length < p.min_length || p.min_gap <= 0 || p.max_gap < p.min_gap) {
    throw ParseError("generate: need 0 < min <= max for wire lengths and gaps");
  }
  if (p.row_length < p.min_length) throw ParseError("generate: row length shorter than the minimum wire");

  Rng rng(mix_seed(p.seed));
  std::uniform_int_distribution<Coord> length(p.min_length, p.max_length);
  std::uniform_int_distribution<Coord> gap(p.min_gap, p.max_gap);
  std::uniform_int_distribution<Coord> offset(0, p.max_gap);

  Layout layout;
  Coord track = 0;
  while (static_cast<int>(layout.features.size()) < p.rects) {
    const Coord y = track * p.track_pitch;
    Coord x = offset(rng);
    while (static_cast<int>(layout.features.size()) < p.rects) {
      const Coord len = std::min(length(rng), p.row_length - x);
      if (len < p.min_length) break;
      const int id = static_cast<int>(layout.features.size());
      layout.features.push_back(Feature{"w" + std::to_string(id), {Rect{x, y, x + len, y + p.wire_width}}});
      x += len + gap(rng);
    }
    ++track;
  }
  return layout;
}

} // namespace mpld
