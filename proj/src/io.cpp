#include "dist2/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dist2 {

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int declared_n = 0;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line
    if (first == "n") {
      long long n;
      if (!(ls >> n) || n < 0)
        throw ParseError(line_no, "bad vertex-count header");
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "trailing tokens after header");
      declared_n = std::max(declared_n, (int)n);
      continue;
    }
    long long u, v;
    std::istringstream es(line);
    if (!(es >> u >> v))
      throw ParseError(line_no, "expected 'u v' edge pair");
    std::string extra;
    if (es >> extra) throw ParseError(line_no, "trailing tokens after edge");
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back((int)u, (int)v);
    max_id = std::max(max_id, (int)std::max(u, v));
  }
  int n = std::max(declared_n, max_id + 1);
  return Graph::from_edges(n, edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<int> parse_coloring(std::istream& in, int n) {
  std::vector<int> colors(n, -1);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long v, c;
    if (!(ls >> v)) continue;
    if (!(ls >> c)) throw ParseError(line_no, "expected 'vertex color' pair");
    if (v < 0 || v >= n)
      throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range");
    if (c < 0) throw ParseError(line_no, "negative color");
    colors[(size_t)v] = (int)c;
  }
  return colors;
}

void write_coloring(const std::vector<int>& colors, std::ostream& out) {
  for (size_t v = 0; v < colors.size(); ++v)
    out << v << " " << colors[v] << "\n";
}

}  // namespace dist2
