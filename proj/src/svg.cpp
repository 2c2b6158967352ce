#include "mpld/svg.hpp"

#include "mpld/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace mpld {

namespace {

constexpr std::array<std::string_view, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                   "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        // Control characters are not allowed in XML 1.0.
        if (static_cast<unsigned char>(ch) < 0x20 && ch != '\t' && ch != '\n' && ch != '\r') {
          out += '?';
        } else {
          out += ch;
        }
    }
  }
  return out;
}

} // namespace

std::span<const std::string_view> mask_palette() { return kPalette; }

std::string render_svg(const Layout& layout, const DecompositionGraph& dg, std::span<const Color> colors, int k) {
  require(static_cast<int>(colors.size()) == dg.size(), "render_svg: assignment size does not match graph");
  require(dg.size() == 0 || static_cast<int>(dg.origins().size()) == dg.size(),
          "render_svg: graph carries no layout origins");
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 0 || colors[v] >= k) throw ContractViolation("render_svg: vertex " + std::to_string(v) + " is uncolored");
  }

  Coord x_lo = 0, y_lo = 0, x_hi = 1, y_hi = 1;
  bool first = true;
  for (const auto& f : layout.features) {
    for (const auto& r : f.rects) {
      x_lo = first ? r.x_lo : std::min(x_lo, r.x_lo);
      y_lo = first ? r.y_lo : std::min(y_lo, r.y_lo);
      x_hi = first ? r.x_hi : std::max(x_hi, r.x_hi);
      y_hi = first ? r.y_hi : std::max(y_hi, r.y_hi);
      first = false;
    }
  }
  const Coord margin = std::max<Coord>(1, std::max(x_hi - x_lo, y_hi - y_lo) / 50);
  // Layout y grows upward, SVG y downward.
  auto sx = [&](Coord x) { return x - x_lo + margin; };
  auto sy = [&](Coord y) { return y_hi - y + margin; };

  std::vector<std::vector<int>> vertices_of(layout.features.size());
  for (int v = 0; v < dg.size(); ++v) {
    const int f = dg.origins()[static_cast<std::size_t>(v)].feature;
    require(f >= 0 && static_cast<std::size_t>(f) < layout.features.size(), "render_svg: origin outside layout");
    vertices_of[static_cast<std::size_t>(f)].push_back(v);
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (x_hi - x_lo + 2 * margin)
      << "\" height=\"" << (y_hi - y_lo + 2 * margin) << "\" viewBox=\"0 0 " << (x_hi - x_lo + 2 * margin) << ' '
      << (y_hi - y_lo + 2 * margin) << "\">\n"
      << "<defs><pattern id=\"hatch\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\">"
      << "<path d=\"M0,8 L8,0\" stroke=\"#000000\" stroke-width=\"1.5\"/></pattern></defs>\n"
      << "<g id=\"masks\" stroke=\"#333333\" stroke-width=\"1\">\n";

  auto emit_rect = [&](const Rect& r, Color c, const std::string& id) {
    svg << "<rect x=\"" << sx(r.x_lo) << "\" y=\"" << sy(r.y_hi) << "\" width=\"" << r.width() << "\" height=\""
        << r.height() << "\" fill=\"" << kPalette[static_cast<std::size_t>(c) % kPalette.size()]
        << "\" data-mask=\"" << c << "\"><title>" << escape(id) << "</title></rect>\n";
  };

  for (std::size_t f = 0; f < layout.features.size(); ++f) {
    const auto& feature = layout.features[f];
    const auto& vs = vertices_of[f];
    if (vs.empty()) continue;
    if (dg.origins()[static_cast<std::size_t>(vs.front())].split) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        emit_rect(dg.origins()[static_cast<std::size_t>(vs[i])].extent, colors[static_cast<std::size_t>(vs[i])],
                  feature.id + "#" + std::to_string(i));
      }
    } else {
      for (const auto& r : feature.rects) emit_rect(r, colors[static_cast<std::size_t>(vs.front())], feature.id);
    }
  }
  svg << "</g>\n<g id=\"conflicts\" fill=\"url(#hatch)\" stroke=\"#ff0000\" stroke-width=\"2\">\n";

  std::vector<char> conflicted(colors.size(), 0);
  for (const auto& [u, v] : dg.conflict_edges()) {
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) {
      conflicted[static_cast<std::size_t>(u)] = 1;
      conflicted[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 0; v < dg.size(); ++v) {
    if (!conflicted[static_cast<std::size_t>(v)]) continue;
    const auto& origin = dg.origins()[static_cast<std::size_t>(v)];
    std::vector<Rect> shapes;
    if (origin.split) {
      shapes.push_back(origin.extent);
    } else {
      shapes = layout.features[static_cast<std::size_t>(origin.feature)].rects;
    }
    for (const auto& r : shapes) {
      svg << "<polygon points=\"" << sx(r.x_lo) << ',' << sy(r.y_lo) << ' ' << sx(r.x_hi) << ',' << sy(r.y_lo) << ' '
          << sx(r.x_hi) << ',' << sy(r.y_hi) << ' ' << sx(r.x_lo) << ',' << sy(r.y_hi) << "\"/>\n";
    }
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

} // namespace mpld
