#include "mpld/geometry.hpp"

#include "mpld/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace mpld {

using json = nlohmann::json;

std::size_t Layout::rect_count() const {
  std::size_t total = 0;
  for (const auto& f : features) total += f.rects.size();
  return total;
}

std::size_t Layout::find(std::string_view id) const {
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].id == id) return i;
  }
  return features.size();
}

namespace {

Coord gap_1d(Coord a_lo, Coord a_hi, Coord b_lo, Coord b_hi) {
  return std::max<Coord>(0, std::max(a_lo, b_lo) - std::min(a_hi, b_hi));
}

std::pair<Coord, Coord> read_interval(const json& rect, const char* axis, std::size_t index) {
  const std::string where = "rects[" + std::to_string(index) + "]." + axis;
  auto it = rect.find(axis);
  if (it == rect.end()) throw ParseError(where + ": missing");
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() || !(*it)[1].is_number_integer()) {
    throw ParseError(where + ": expected [lo, hi] pair of integers");
  }
  return {(*it)[0].get<Coord>(), (*it)[1].get<Coord>()};
}

bool interiors_overlap(const Rect& a, const Rect& b) {
  return std::min(a.x_hi, b.x_hi) > std::max(a.x_lo, b.x_lo) &&
         std::min(a.y_hi, b.y_hi) > std::max(a.y_lo, b.y_lo);
}

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct CellKey {
  Coord x;
  Coord y;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    const auto h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(k.y);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

Layout layout_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("layout: top level must be an object");
  Layout layout;
  if (auto it = doc.find("units_per_nm"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<Coord>() <= 0) {
      throw ParseError("units_per_nm: expected a positive integer");
    }
    layout.units_per_nm = it->get<Coord>();
  }
  auto rects = doc.find("rects");
  if (rects == doc.end()) throw ParseError("rects: missing");
  if (!rects->is_array()) throw ParseError("rects: expected an array");

  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < rects->size(); ++i) {
    const json& r = (*rects)[i];
    const std::string where = "rects[" + std::to_string(i) + "]";
    if (!r.is_object()) throw ParseError(where + ": expected an object");
    auto id = r.find("id");
    if (id == r.end() || !id->is_string()) throw ParseError(where + ".id: expected a string");
    if (id->get_ref<const std::string&>().empty()) throw ParseError(where + ".id: must be non-empty");
    const auto [x_lo, x_hi] = read_interval(r, "x", i);
    const auto [y_lo, y_hi] = read_interval(r, "y", i);
    Rect rect{x_lo, y_lo, x_hi, y_hi};
    if (x_lo >= x_hi) throw ParseError(where + ": degenerate rectangle (x_lo >= x_hi)");
    if (y_lo >= y_hi) throw ParseError(where + ": degenerate rectangle (y_lo >= y_hi)");

    const std::string& key = id->get_ref<const std::string&>();
    auto [slot, inserted] = by_id.try_emplace(key, layout.features.size());
    if (inserted) layout.features.push_back(Feature{key, {}});
    layout.features[slot->second].rects.push_back(rect);
  }

  std::vector<Rect> flat;
  std::vector<std::size_t> owner;
  for (std::size_t f = 0; f < layout.features.size(); ++f) {
    for (const auto& r : layout.features[f].rects) {
      flat.push_back(r);
      owner.push_back(f);
    }
  }
  for_each_close_pair(flat, 1.0, [&](std::size_t i, std::size_t j) {
    if (owner[i] != owner[j] && interiors_overlap(flat[i], flat[j])) {
      throw ParseError("layout: features '" + layout.features[owner[i]].id + "' and '" +
                       layout.features[owner[j]].id + "' overlap");
    }
  });
  return layout;
}

} // namespace

Layout parse_layout(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("layout: ") + e.what());
  }
  return layout_from_json(doc);
}

Layout parse_layout(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_layout(in);
}

std::string layout_to_json(const Layout& layout) {
  using ordered = nlohmann::ordered_json;
  ordered rects = ordered::array();
  for (const auto& f : layout.features) {
    for (const auto& r : f.rects) {
      rects.push_back(ordered{{"id", f.id}, {"x", {r.x_lo, r.x_hi}}, {"y", {r.y_lo, r.y_hi}}});
    }
  }
  ordered doc = {{"units_per_nm", layout.units_per_nm}, {"rects", std::move(rects)}};
  return doc.dump();
}

double rect_distance(const Rect& a, const Rect& b) {
  const auto dx = static_cast<double>(gap_1d(a.x_lo, a.x_hi, b.x_lo, b.x_hi));
  const auto dy = static_cast<double>(gap_1d(a.y_lo, a.y_hi, b.y_lo, b.y_hi));
  return std::hypot(dx, dy);
}

bool within_reach(const Rect& a, const Rect& b, double reach) {
  const Coord dx = gap_1d(a.x_lo, a.x_hi, b.x_lo, b.x_hi);
  const Coord dy = gap_1d(a.y_lo, a.y_hi, b.y_lo, b.y_hi);
  if (static_cast<double>(dx) >= reach || static_cast<double>(dy) >= reach) return false;
  const long double lx = dx;
  const long double ly = dy;
  const long double lr = reach;
  return lx * lx + ly * ly < lr * lr;
}

void for_each_close_pair(const std::vector<Rect>& rects, double reach,
                         const std::function<void(std::size_t, std::size_t)>& visit) {
  if (rects.size() < 2 || reach <= 0.0) return;

  double mean_dim = 0.0;
  for (const auto& r : rects) mean_dim += static_cast<double>(std::max(r.width(), r.height()));
  mean_dim /= static_cast<double>(rects.size());
  const Coord cell = std::max<Coord>(1, static_cast<Coord>(std::ceil(std::max(reach, mean_dim))));
  const Coord pad = static_cast<Coord>(std::ceil(reach));

  std::unordered_map<CellKey, std::vector<std::size_t>, CellHash> grid;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const auto& r = rects[i];
    for (Coord cx = floor_div(r.x_lo, cell); cx <= floor_div(r.x_hi, cell); ++cx) {
      for (Coord cy = floor_div(r.y_lo, cell); cy <= floor_div(r.y_hi, cell); ++cy) {
        grid[CellKey{cx, cy}].push_back(i);
      }
    }
  }

  std::vector<std::size_t> stamp(rects.size(), rects.size());
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const auto& r = rects[i];
    for (Coord cx = floor_div(r.x_lo - pad, cell); cx <= floor_div(r.x_hi + pad, cell); ++cx) {
      for (Coord cy = floor_div(r.y_lo - pad, cell); cy <= floor_div(r.y_hi + pad, cell); ++cy) {
        auto it = grid.find(CellKey{cx, cy});
        if (it == grid.end()) continue;
        for (std::size_t j : it->second) {
          if (j <= i || stamp[j] == i) continue;
          stamp[j] = i;
          if (within_reach(r, rects[j], reach)) visit(i, j);
        }
      }
    }
  }
}

LayoutGraph build_layout_graph(const Layout& layout, double min_cs) {
  require(min_cs > 0.0, "build_layout_graph: min_cs must be positive");
  LayoutGraph lg;
  lg.vertex_count = static_cast<int>(layout.features.size());
  lg.min_cs = min_cs;

  std::vector<Rect> flat;
  std::vector<int> owner;
  flat.reserve(layout.rect_count());
  for (std::size_t f = 0; f < layout.features.size(); ++f) {
    for (const auto& r : layout.features[f].rects) {
      flat.push_back(r);
      owner.push_back(static_cast<int>(f));
    }
  }
  const double reach = min_cs * static_cast<double>(layout.units_per_nm);
  for_each_close_pair(flat, reach, [&](std::size_t i, std::size_t j) {
    const int u = owner[i];
    const int v = owner[j];
    if (u != v) lg.edges.emplace_back(std::min(u, v), std::max(u, v));
  });
  std::sort(lg.edges.begin(), lg.edges.end());
  lg.edges.erase(std::unique(lg.edges.begin(), lg.edges.end()), lg.edges.end());
  return lg;
}

} // namespace mpld
