#pragma once

#include "chordal/graph.hpp"

#include <iosfwd>
#include <string>

namespace chordal {

/// Edge-list text format:
///   c <comment>
///   p <n> <m>
///   e <u> <v>        (1-indexed endpoints)
/// One p line, then exactly m e lines; c lines may appear anywhere.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Canonical form: "p n m" followed by the edges with u < v, sorted
/// lexicographically, LF line endings. Re-writing a canonical file is
/// byte-identical.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

std::string to_edge_list_string(const Graph& g);

} // namespace chordal
