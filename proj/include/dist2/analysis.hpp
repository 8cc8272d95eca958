#pragma once

#include <optional>
#include <vector>

#include "dist2/graph.hpp"
#include "dist2/rational.hpp"

namespace dist2 {

// Neighborhood of v at distance exactly 1 or 2; d_star is its size (the
// number of constraints v faces in a 2-distance coloring).
struct DistanceProfile {
  int vertex = -1;
  std::vector<int> two_distance_neighbors;  // sorted, excludes v
  int d_star = 0;
};

// Square of g: same vertices, edges between every pair at distance <= 2.
Graph square_graph(const Graph& g);

DistanceProfile two_distance_profile(const Graph& g, int v);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// 2m/n.  Throws GraphError on the empty graph.
Rational average_degree(const Graph& g);

// Maximum average degree over all non-empty subgraphs, by enumerating vertex
// subsets.  Guarded to n <= 20; intended as an oracle and cross-check.
Rational mad_bruteforce(const Graph& g);

// Exact maximum average degree for arbitrary sizes: binary search over
// candidate densities with a max-flow decision procedure, then a
// continued-fraction snap to the unique rational with denominator <= n.
Rational mad_exact(const Graph& g);

// Vertex sets of connected components, each sorted, ordered by smallest id.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace dist2
