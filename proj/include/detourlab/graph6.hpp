#pragma once

#include <string>
#include <string_view>

#include "detourlab/graph.hpp"

namespace detourlab {

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// newline are tolerated. Throws Error(kParseError) with the byte offset of
/// the first bad byte.
Graph graph6_decode(std::string_view text);

/// Encodes `g` as graph6 without header or newline.
std::string graph6_encode(const Graph& g);

}  // namespace detourlab
