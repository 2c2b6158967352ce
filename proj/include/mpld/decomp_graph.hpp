#pragma once

#include "mpld/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mpld {

using Color = int;
/// Per-vertex colors; kUncolored marks a vertex without a color yet.
using Assignment = std::vector<Color>;
inline constexpr Color kUncolored = -1;

/// Where a decomposition-graph vertex came from in the layout.
struct VertexOrigin {
  int feature = -1;
  Rect extent;        // sub-rectangle for split features, else the feature's bounding box
  bool split = false; // true when the feature was cut by stitch insertion
};

/// Vertex set with conflict edges (CE) and stitch edges (SE).
///
/// Edges are stored normalized (u < v) in input order. The constructor
/// rejects self-loops, out-of-range endpoints, duplicates and pairs present
/// in both CE and SE.
class DecompositionGraph {
public:
  DecompositionGraph() = default;
  DecompositionGraph(int n, std::vector<Edge> conflict_edges, std::vector<Edge> stitch_edges,
                     std::vector<VertexOrigin> origins = {});

  int size() const { return n_; }
  const std::vector<Edge>& conflict_edges() const { return ce_; }
  const std::vector<Edge>& stitch_edges() const { return se_; }
  std::span<const int> conflict_neighbors(int v) const { return ce_adj_[static_cast<std::size_t>(v)]; }
  std::span<const int> stitch_neighbors(int v) const { return se_adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const {
    return static_cast<int>(ce_adj_[static_cast<std::size_t>(v)].size() + se_adj_[static_cast<std::size_t>(v)].size());
  }
  /// Empty unless the graph was built from a layout.
  const std::vector<VertexOrigin>& origins() const { return origins_; }

  friend bool operator==(const DecompositionGraph& a, const DecompositionGraph& b) {
    return a.n_ == b.n_ && a.ce_ == b.ce_ && a.se_ == b.se_;
  }

private:
  int n_ = 0;
  std::vector<Edge> ce_;
  std::vector<Edge> se_;
  std::vector<std::vector<int>> ce_adj_;
  std::vector<std::vector<int>> se_adj_;
  std::vector<VertexOrigin> origins_;
};

/// Splits single-rectangle features with at least two conflict neighbors at
/// the midpoints of gaps between neighbor shadows on the feature's long axis.
///
/// Sub-vertices of a feature are consecutive and ordered low-to-high along the
/// split axis; consecutive pieces are joined by a stitch edge. Each layout
/// edge becomes exactly one conflict edge between the pieces its projections
/// fall on. A gap qualifies when it is at least 2 database units wide so the
/// cut lands on an integer coordinate strictly inside it.
DecompositionGraph insert_stitch_candidates(const Layout& layout, const LayoutGraph& lg);

struct HiddenVertex {
  int vertex = -1;
  std::vector<int> conflict_neighbors; // live at removal time
  std::vector<int> stitch_neighbors;
};

/// Hidden vertices in removal order; recovery replays it back to front.
using RecoveryStack = std::vector<HiddenVertex>;

/// A connected piece of the simplified graph with local vertex numbering.
struct Component {
  DecompositionGraph graph;
  std::vector<int> vertices; // local index -> vertex of the parent graph
};

struct Simplified {
  std::vector<Component> components;
  RecoveryStack stack;
};

/// Repeatedly hides vertices whose combined CE+SE degree is below k, then
/// splits what survives into connected components (over CE and SE).
Simplified simplify(const DecompositionGraph& dg, int k);

/// Writes component colorings into a parent-graph assignment (uncolored elsewhere).
Assignment merge_components(const DecompositionGraph& dg, std::span<const Component> components,
                            std::span<const Assignment> colorings);

/// Colors every hidden vertex in LIFO order. `colors` must hold a color in
/// [0, k) for every vertex not on the stack (ContractViolation otherwise).
/// A hidden vertex takes a color unused by its snapshot conflict neighbors,
/// preferring the one shared by the most stitch neighbors, then the lowest index.
Assignment recover(Assignment colors, const RecoveryStack& stack, const DecompositionGraph& dg, int k);

/// Color recovery picks for one hidden vertex, given its neighbors' colors.
Color pick_recovery_color(std::span<const Color> conflict_colors, std::span<const Color> stitch_colors, int k);

} // namespace mpld
