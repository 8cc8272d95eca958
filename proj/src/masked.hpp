#pragma once

#include <vector>

#include "dist2/graph.hpp"

// Helpers for operating on the subgraph induced by an alive-mask without
// materializing it.  The reduction engine deletes vertices by clearing mask
// bits, which keeps vertex ids stable across the whole reduce/extend cycle.
namespace dist2::masked {

inline int degree(const Graph& g, const std::vector<char>& alive, int v) {
  int d = 0;
  for (int w : g.neighbors(v)) d += alive[w] ? 1 : 0;
  return d;
}

inline std::vector<char> all_alive(const Graph& g) {
  return std::vector<char>(g.vertex_count(), 1);
}

}  // namespace dist2::masked
