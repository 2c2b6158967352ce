#include "mpld/decomp_graph.hpp"

#include "mpld/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace mpld {

namespace {

Edge normalized(Edge e) {
  return e.first < e.second ? e : Edge{e.second, e.first};
}

void check_edges(int n, std::vector<Edge>& edges, const char* name, std::set<Edge>& seen) {
  for (auto& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
      throw ContractViolation(std::string(name) + " edge (" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + ") references a missing vertex");
    }
    if (e.first == e.second) {
      throw ContractViolation(std::string(name) + " self-loop on vertex " + std::to_string(e.first));
    }
    e = normalized(e);
    if (!seen.insert(e).second) {
      throw ContractViolation(std::string(name) + " edge (" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + ") is duplicated or also in the other edge set");
    }
  }
}

Rect bounding_box(const std::vector<Rect>& rects) {
  Rect box = rects.front();
  for (const auto& r : rects) {
    box.x_lo = std::min(box.x_lo, r.x_lo);
    box.y_lo = std::min(box.y_lo, r.y_lo);
    box.x_hi = std::max(box.x_hi, r.x_hi);
    box.y_hi = std::max(box.y_hi, r.y_hi);
  }
  return box;
}

struct Interval {
  Coord lo;
  Coord hi;
};

bool splits_along_x(const Rect& r) { return r.width() >= r.height(); }

// Shadow of `other`'s conflicting rectangles on `target`'s split axis,
// clipped to the target; a shadow beyond either end collapses to that end.
Interval shadow(const Rect& target, const Feature& other, double reach) {
  const bool along_x = splits_along_x(target);
  const Coord t_lo = along_x ? target.x_lo : target.y_lo;
  const Coord t_hi = along_x ? target.x_hi : target.y_hi;
  Coord lo = 0;
  Coord hi = 0;
  bool any = false;
  for (const auto& r : other.rects) {
    if (!within_reach(target, r, reach)) continue;
    const Coord r_lo = along_x ? r.x_lo : r.y_lo;
    const Coord r_hi = along_x ? r.x_hi : r.y_hi;
    lo = any ? std::min(lo, r_lo) : r_lo;
    hi = any ? std::max(hi, r_hi) : r_hi;
    any = true;
  }
  if (!any) {
    // Only reachable through a caller-built graph; treat as a whole-extent shadow.
    return {t_lo, t_hi};
  }
  lo = std::clamp(lo, t_lo, t_hi);
  hi = std::clamp(hi, t_lo, t_hi);
  return {lo, hi};
}

} // namespace

DecompositionGraph::DecompositionGraph(int n, std::vector<Edge> conflict_edges, std::vector<Edge> stitch_edges,
                                       std::vector<VertexOrigin> origins)
    : n_(n), ce_(std::move(conflict_edges)), se_(std::move(stitch_edges)), origins_(std::move(origins)) {
  require(n_ >= 0, "decomposition graph: negative vertex count");
  require(origins_.empty() || static_cast<int>(origins_.size()) == n_,
          "decomposition graph: origins must cover every vertex");
  std::set<Edge> seen;
  check_edges(n_, ce_, "conflict", seen);
  check_edges(n_, se_, "stitch", seen);
  ce_adj_.assign(static_cast<std::size_t>(n_), {});
  se_adj_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [u, v] : ce_) {
    ce_adj_[static_cast<std::size_t>(u)].push_back(v);
    ce_adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (const auto& [u, v] : se_) {
    se_adj_[static_cast<std::size_t>(u)].push_back(v);
    se_adj_[static_cast<std::size_t>(v)].push_back(u);
  }
}

DecompositionGraph insert_stitch_candidates(const Layout& layout, const LayoutGraph& lg) {
  const auto nf = layout.features.size();
  require(static_cast<std::size_t>(lg.vertex_count) == nf, "insert_stitch_candidates: graph does not match layout");
  const double reach = lg.min_cs * static_cast<double>(layout.units_per_nm);

  std::vector<std::vector<int>> neighbors(nf);
  for (const auto& [u, v] : lg.edges) {
    neighbors[static_cast<std::size_t>(u)].push_back(v);
    neighbors[static_cast<std::size_t>(v)].push_back(u);
  }

  // Cut coordinates per feature, ascending.
  std::vector<std::vector<Coord>> cuts(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const auto& feature = layout.features[f];
    if (feature.rects.size() != 1 || neighbors[f].size() < 2) continue;
    std::vector<Interval> shadows;
    for (int g : neighbors[f]) shadows.push_back(shadow(feature.rects.front(), layout.features[static_cast<std::size_t>(g)], reach));
    std::sort(shadows.begin(), shadows.end(), [](const Interval& a, const Interval& b) {
      return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    Coord covered = shadows.front().hi;
    for (std::size_t i = 1; i < shadows.size(); ++i) {
      if (shadows[i].lo - covered >= 2) cuts[f].push_back(covered + (shadows[i].lo - covered) / 2);
      covered = std::max(covered, shadows[i].hi);
    }
  }

  std::vector<int> base(nf + 1, 0);
  for (std::size_t f = 0; f < nf; ++f) base[f + 1] = base[f] + static_cast<int>(cuts[f].size()) + 1;
  const int n = base[nf];

  std::vector<VertexOrigin> origins(static_cast<std::size_t>(n));
  std::vector<Edge> se;
  for (std::size_t f = 0; f < nf; ++f) {
    const auto& feature = layout.features[f];
    if (cuts[f].empty()) {
      origins[static_cast<std::size_t>(base[f])] = {static_cast<int>(f), bounding_box(feature.rects), false};
      continue;
    }
    const Rect& r = feature.rects.front();
    const bool along_x = splits_along_x(r);
    Coord lo = along_x ? r.x_lo : r.y_lo;
    for (std::size_t piece = 0; piece <= cuts[f].size(); ++piece) {
      const Coord hi = piece < cuts[f].size() ? cuts[f][piece] : (along_x ? r.x_hi : r.y_hi);
      Rect extent = r;
      if (along_x) {
        extent.x_lo = lo;
        extent.x_hi = hi;
      } else {
        extent.y_lo = lo;
        extent.y_hi = hi;
      }
      const int vertex = base[f] + static_cast<int>(piece);
      origins[static_cast<std::size_t>(vertex)] = {static_cast<int>(f), extent, true};
      if (piece > 0) se.emplace_back(vertex - 1, vertex);
      lo = hi;
    }
  }

  auto piece_of = [&](int f, int other) {
    const auto fi = static_cast<std::size_t>(f);
    if (cuts[fi].empty()) return base[fi];
    const Interval s = shadow(layout.features[fi].rects.front(), layout.features[static_cast<std::size_t>(other)], reach);
    const auto before = std::lower_bound(cuts[fi].begin(), cuts[fi].end(), s.lo) - cuts[fi].begin();
    return base[fi] + static_cast<int>(before);
  };

  std::vector<Edge> ce;
  ce.reserve(lg.edges.size());
  for (const auto& [u, v] : lg.edges) ce.emplace_back(piece_of(u, v), piece_of(v, u));
  return DecompositionGraph(n, std::move(ce), std::move(se), std::move(origins));
}

Simplified simplify(const DecompositionGraph& dg, int k) {
  require(k >= 2, "simplify: k must be at least 2");
  const int n = dg.size();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::deque<int> work;
  for (int v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = dg.degree(v);
    if (dg.degree(v) < k) work.push_back(v);
  }

  Simplified out;
  while (!work.empty()) {
    const int v = work.front();
    work.pop_front();
    const auto vi = static_cast<std::size_t>(v);
    if (!alive[vi] || degree[vi] >= k) continue;
    HiddenVertex hidden{v, {}, {}};
    for (int u : dg.conflict_neighbors(v)) {
      if (alive[static_cast<std::size_t>(u)]) hidden.conflict_neighbors.push_back(u);
    }
    for (int u : dg.stitch_neighbors(v)) {
      if (alive[static_cast<std::size_t>(u)]) hidden.stitch_neighbors.push_back(u);
    }
    alive[vi] = 0;
    for (const auto* list : {&hidden.conflict_neighbors, &hidden.stitch_neighbors}) {
      for (int u : *list) {
        if (--degree[static_cast<std::size_t>(u)] < k) work.push_back(u);
      }
    }
    out.stack.push_back(std::move(hidden));
  }

  std::vector<int> component_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (!alive[static_cast<std::size_t>(s)] || component_of[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> frontier{s};
    component_of[static_cast<std::size_t>(s)] = id;
    while (!frontier.empty()) {
      const int v = frontier.back();
      frontier.pop_back();
      members.back().push_back(v);
      for (auto span : {dg.conflict_neighbors(v), dg.stitch_neighbors(v)}) {
        for (int u : span) {
          const auto ui = static_cast<std::size_t>(u);
          if (alive[ui] && component_of[ui] < 0) {
            component_of[ui] = id;
            frontier.push_back(u);
          }
        }
      }
    }
    std::sort(members.back().begin(), members.back().end());
  }

  std::vector<int> local(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Edge>> ce(members.size());
  std::vector<std::vector<Edge>> se(members.size());
  for (const auto& m : members) {
    for (std::size_t i = 0; i < m.size(); ++i) local[static_cast<std::size_t>(m[i])] = static_cast<int>(i);
  }
  auto route = [&](const std::vector<Edge>& edges, std::vector<std::vector<Edge>>& into) {
    for (const auto& [u, v] : edges) {
      const int c = component_of[static_cast<std::size_t>(u)];
      if (c < 0 || component_of[static_cast<std::size_t>(v)] != c) continue;
      into[static_cast<std::size_t>(c)].emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    }
  };
  route(dg.conflict_edges(), ce);
  route(dg.stitch_edges(), se);

  for (std::size_t c = 0; c < members.size(); ++c) {
    std::vector<VertexOrigin> origins;
    if (!dg.origins().empty()) {
      for (int v : members[c]) origins.push_back(dg.origins()[static_cast<std::size_t>(v)]);
    }
    out.components.push_back(Component{
        DecompositionGraph(static_cast<int>(members[c].size()), std::move(ce[c]), std::move(se[c]), std::move(origins)),
        std::move(members[c])});
  }
  return out;
}

Assignment merge_components(const DecompositionGraph& dg, std::span<const Component> components,
                            std::span<const Assignment> colorings) {
  require(components.size() == colorings.size(), "merge_components: one coloring per component required");
  Assignment colors(static_cast<std::size_t>(dg.size()), kUncolored);
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& vertices = components[c].vertices;
    require(colorings[c].size() == vertices.size(), "merge_components: coloring size mismatch");
    for (std::size_t i = 0; i < vertices.size(); ++i) colors[static_cast<std::size_t>(vertices[i])] = colorings[c][i];
  }
  return colors;
}

Color pick_recovery_color(std::span<const Color> conflict_colors, std::span<const Color> stitch_colors, int k) {
  std::vector<int> conflicts(static_cast<std::size_t>(k), 0);
  std::vector<int> stitch_matches(static_cast<std::size_t>(k), 0);
  for (Color c : conflict_colors) ++conflicts[static_cast<std::size_t>(c)];
  for (Color c : stitch_colors) ++stitch_matches[static_cast<std::size_t>(c)];
  Color best = 0;
  for (Color c = 1; c < k; ++c) {
    const auto ci = static_cast<std::size_t>(c);
    const auto bi = static_cast<std::size_t>(best);
    // Fewer conflicts first; conflict-free colors exist whenever the hiding rule held.
    if (conflicts[ci] < conflicts[bi] ||
        (conflicts[ci] == conflicts[bi] && stitch_matches[ci] > stitch_matches[bi])) {
      best = c;
    }
  }
  return best;
}

Assignment recover(Assignment colors, const RecoveryStack& stack, const DecompositionGraph& dg, int k) {
  require(static_cast<int>(colors.size()) == dg.size(), "recover: assignment size does not match graph");
  std::vector<char> hidden(colors.size(), 0);
  for (const auto& h : stack) hidden[static_cast<std::size_t>(h.vertex)] = 1;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (hidden[v]) continue;
    if (colors[v] < 0 || colors[v] >= k) {
      throw ContractViolation("recover: surviving vertex " + std::to_string(v) + " has no valid color");
    }
  }

  std::vector<Color> conflict_colors;
  std::vector<Color> stitch_colors;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    conflict_colors.clear();
    stitch_colors.clear();
    for (int u : it->conflict_neighbors) conflict_colors.push_back(colors[static_cast<std::size_t>(u)]);
    for (int u : it->stitch_neighbors) stitch_colors.push_back(colors[static_cast<std::size_t>(u)]);
    colors[static_cast<std::size_t>(it->vertex)] = pick_recovery_color(conflict_colors, stitch_colors, k);
  }
  return colors;
}

} // namespace mpld
