#pragma once

#include <string>
#include <string_view>

#include "lct/graph.hpp"

namespace lct {

/// Largest order representable in the single-byte size form.
inline constexpr int kGraph6MaxOrder = 62;

/// Decode one graph6 line. A trailing "\n" or "\r\n" is ignored, as is an
/// optional ">>graph6<<" prefix. Throws ParseError with the failing byte offset.
Graph parse_graph6(std::string_view text);

/// Encode `g` (upper triangle, column-major, 6 bits per byte offset by 63).
/// Throws CapExceeded when g.order() > kGraph6MaxOrder.
std::string write_graph6(const Graph& g);

}  // namespace lct
