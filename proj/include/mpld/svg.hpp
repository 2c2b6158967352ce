#pragma once

#include "mpld/decomp_graph.hpp"
#include "mpld/geometry.hpp"

#include <span>
#include <string>
#include <string_view>

namespace mpld {

/// Mask fill colors; mask m uses entry m % size.
std::span<const std::string_view> mask_palette();

/// SVG 1.1 picture of a colored decomposition: one <rect> per layout
/// rectangle (split features draw one <rect> per piece), filled by mask.
/// Vertices on a monochrome conflict edge get a hatched <polygon> overlay.
/// `dg` must carry origins from insert_stitch_candidates on `layout`.
std::string render_svg(const Layout& layout, const DecompositionGraph& dg, std::span<const Color> colors, int k);

} // namespace mpld
