#pragma once

#include "mpld/decomp_graph.hpp"
#include "mpld/geometry.hpp"

#include <cstdint>

namespace mpld {

struct GraphParams {
  int vertices = 0;
  std::int64_t conflict_edges = 0;
  std::int64_t stitch_edges = 0;
  std::uint64_t seed = 0;
};

/// Random decomposition graph. Stitch edges join consecutive vertices
/// (i, i+1), modelling pieces of one split feature; conflict edges are
/// uniform over the remaining pairs. Edges are emitted sorted.
/// Throws ParseError when the counts cannot be realized.
DecompositionGraph random_graph(const GraphParams& params);

/// Horizontal wires laid out on tracks, the shape of routed metal in a
/// standard-cell block. Each track is filled left to right with wires of
/// random length separated by random gaps until `rects` wires exist.
struct LayoutParams {
  int rects = 100;
  Coord track_pitch = 100;
  Coord wire_width = 40;
  Coord min_length = 80;
  Coord max_length = 600;
  Coord min_gap = 60;
  Coord max_gap = 400;
  Coord row_length = 6000;
  std::uint64_t seed = 0;
};

Layout random_layout(const LayoutParams& params);

} // namespace mpld
