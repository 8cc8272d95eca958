#pragma once

#include <iosfwd>
#include <string>

#include "dist2/graph.hpp"

namespace dist2 {

struct ParseError : GraphError {
  int line;
  ParseError(int line_no, const std::string& what)
      : GraphError("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// Edge-list format: one "u v" pair per line; '#' starts a comment; blank
// lines are skipped; an optional "n <count>" header declares the vertex
// count (otherwise n = 1 + max id).  Duplicate edges collapse.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

// Coloring files: one "v color" pair per line, sorted by vertex.
std::vector<int> parse_coloring(std::istream& in, int n);
void write_coloring(const std::vector<int>& colors, std::ostream& out);

}  // namespace dist2
