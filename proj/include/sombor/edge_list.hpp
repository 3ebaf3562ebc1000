#pragma once

#include <iosfwd>
#include <string>

#include "sombor/graph.hpp"

namespace sombor {

// Edge-list text format:
//   p <vertex_count> <edge_count>
//   e <u> <v>          (1-based ids, one line per edge)
// Blank lines and lines starting with `c` are ignored.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Emits the header and edges sorted lexicographically.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace sombor
