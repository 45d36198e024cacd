#pragma once

#include <string>
#include <string_view>

#include "maxrho/graph.hpp"

namespace maxrho {

/// Standard graph6 text for a loop-free graph (no trailing newline).
std::string graph6_encode(const Graph& g);

/// Parses one graph6 record, with or without the >>graph6<< header; a single
/// trailing '\n' is tolerated.
/// Throws ParseError carrying the offending byte offset.
Graph graph6_decode(std::string_view text);

}  // namespace maxrho
