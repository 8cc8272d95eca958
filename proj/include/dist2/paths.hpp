#pragma once

#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

// Maximal chain of degree-2 vertices joining two branch vertices (degree
// >= 3).  k() is the number of internal 2-vertices; a direct edge between
// branch vertices is a 0-path and is not materialized here.
struct KPath {
  int u = -1, v = -1;          // endpoints; u == v when the chain closes a loop
  std::vector<int> internals;  // in order from u to v, all of degree 2
  bool loop = false;
  int k() const { return (int)internals.size(); }
};

// Connected component consisting solely of degree-2 vertices.
struct BareCycle {
  std::vector<int> vertices;  // cycle order, starting at the smallest id
};

struct PathDecomposition {
  std::vector<KPath> paths;         // sorted by (u, v, internals)
  std::vector<BareCycle> bare_cycles;
};

// Chains whose far end stops at a vertex of degree <= 1 are not k-paths and
// are omitted from the decomposition.
PathDecomposition classify_paths(const Graph& g);
PathDecomposition classify_paths(const Graph& g, const std::vector<char>& alive);

// The chain leaving v through one incident edge, walked until it reaches a
// vertex of degree != 2 (possibly v itself again).
struct IncidentPath {
  int k = 0;                // degree-2 internals traversed
  int first = -1;           // neighbor of v on this chain (== far when k == 0)
  int far = -1;             // terminal at the other end
  bool far_branch = false;  // far terminal has degree >= 3
  bool loop = false;        // chain returns to v
  std::vector<int> internals;
};

// One entry per incident edge of v, ordered by neighbor id; a loop chain
// contributes two entries (one per direction).
std::vector<IncidentPath> incident_paths(const Graph& g,
                                         const std::vector<char>& alive, int v);
std::vector<IncidentPath> incident_paths(const Graph& g, int v);

// Multiset of chain lengths around a branch vertex, sorted descending.
struct VertexSignature {
  int vertex = -1;
  std::vector<int> ks;
};
VertexSignature vertex_signature(const Graph& g, int v);  // degree(v) >= 3

}  // namespace dist2
