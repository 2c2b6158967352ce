#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpld {

using Coord = std::int64_t;

/// Axis-aligned rectangle in database units.
struct Rect {
  Coord x_lo = 0;
  Coord y_lo = 0;
  Coord x_hi = 0;
  Coord y_hi = 0;

  Coord width() const { return x_hi - x_lo; }
  Coord height() const { return y_hi - y_lo; }
  bool valid() const { return x_lo < x_hi && y_lo < y_hi; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// A named feature: the union of one or more rectangles.
struct Feature {
  std::string id;
  std::vector<Rect> rects;
};

struct Layout {
  std::vector<Feature> features;
  Coord units_per_nm = 1;

  std::size_t rect_count() const;
  /// Index of the feature with `id`, or features.size() if absent.
  std::size_t find(std::string_view id) const;
};

using Edge = std::pair<int, int>;

/// Features as vertices; an edge joins two features closer than min_cs.
struct LayoutGraph {
  int vertex_count = 0;  // == layout.features.size(); vertex i is feature i
  std::vector<Edge> edges; // u < v, sorted, unique
  double min_cs = 0.0;   // nm
};

/// Parses the layout JSON document. Rectangles sharing an id are grouped under
/// one feature in first-appearance order. Throws ParseError.
Layout parse_layout(std::istream& in);
Layout parse_layout(std::string_view text);

std::string layout_to_json(const Layout& layout);

/// Euclidean gap between the closest boundary points, in database units;
/// 0 when the rectangles touch or overlap.
double rect_distance(const Rect& a, const Rect& b);

/// True iff rect_distance(a, b) < reach, evaluated without rounding for
/// integral reach.
bool within_reach(const Rect& a, const Rect& b, double reach);

/// Calls visit(i, j) once for every i < j with within_reach(rects[i], rects[j], reach).
/// Rectangles are bucketed into a uniform grid so sparse layouts avoid O(n^2).
void for_each_close_pair(const std::vector<Rect>& rects, double reach,
                         const std::function<void(std::size_t, std::size_t)>& visit);

/// Layout graph for spacing limit `min_cs` (nm). Throws ContractViolation if min_cs <= 0.
LayoutGraph build_layout_graph(const Layout& layout, double min_cs);

} // namespace mpld
