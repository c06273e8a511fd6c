#pragma once

#include "estrada/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace estrada {

/// Parses the edge-list text format:
///
///     # optional comments
///     n m
///     u v        (m lines, 0-based)
///
/// Blank lines and lines starting with '#' are skipped. Throws parse_error
/// carrying the 1-based line and column of the offending token.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Decodes one headerless graph6 string (n <= 62). Surrounding whitespace is
/// ignored. Throws parse_error on malformed input.
Graph decode_graph6(std::string_view text);

} // namespace estrada
