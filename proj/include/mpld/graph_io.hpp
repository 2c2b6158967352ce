#pragma once

#include "mpld/decomp_graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace mpld {

/// Reads `{"n": int, "ce": [[u,v],...], "se": [[u,v],...]}` (0-based indices).
/// Structural problems (bad indices, self-loops, duplicate or shared pairs)
/// are reported as ParseError.
DecompositionGraph parse_graph(std::istream& in);
DecompositionGraph parse_graph(std::string_view text);

/// Compact single-line form of the same schema.
std::string graph_to_json(const DecompositionGraph& dg);

} // namespace mpld
