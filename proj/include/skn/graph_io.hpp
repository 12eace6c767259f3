#pragma once

#include <string>
#include <string_view>

#include "skn/graph.hpp"

namespace skn {

/// graph6 encoding, terminated by a newline.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line (an optional ">>graph6<<" header and trailing
/// newline are accepted). Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

/// DIMACS edge format: "p edge V E" followed by one "e i j" line per edge,
/// 1-based, i < j, ascending.
std::string to_dimacs(const Graph& g);

/// Parses DIMACS edge format; "c" comment lines are skipped. Throws
/// ParseError naming the offending line.
Graph from_dimacs(std::string_view text);

}  // namespace skn
