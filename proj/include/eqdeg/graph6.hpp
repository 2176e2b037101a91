#pragma once

#include "eqdeg/graph.hpp"

#include <string>
#include <string_view>

namespace eqdeg {

/// Largest order representable in the small graph6 format.
inline constexpr int kGraph6MaxOrder = 62;

/// Small-format graph6: one order byte (63 + n) followed by the upper
/// triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte,
/// most significant first, each byte offset by 63, final group zero padded.
/// Throws InputError for order > 62.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6. Throws FormatError (with byte offset) on bytes
/// outside 63..126, the large-order prefix, truncated or overlong input,
/// and non-zero padding bits.
Graph from_graph6(std::string_view text);

}  // namespace eqdeg
