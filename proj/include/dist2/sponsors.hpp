#pragma once

#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

// One non-loop 2-path u0-a-b-u3 together with the endpoint elected to
// sponsor it (give the larger share to its adjacent internal).
struct TwoPathSponsorEntry {
  int u0, a, b, u3;
  int sponsor;  // u0 or u3: the endpoint farther from its tree root
  int tree;
};

// A (1,1,1)-vertex with its two sponsoring far endpoints (the ends of the
// two legs pointing away from the root) and the root-side far endpoint.
struct TripleSponsorEntry {
  int center;
  int root_side;
  int sponsor1, sponsor2;  // ascending
  int tree;
};

struct SponsorAssignment {
  int D = 0;
  std::vector<int> two_path_roots;  // root vertex of each 2-path tree
  std::vector<int> triple_roots;    // root vertex of each (1,1,1) tree
  std::vector<TwoPathSponsorEntry> two_paths;
  std::vector<TripleSponsorEntry> triples;

  const TwoPathSponsorEntry* find_two_path(int internal_vertex) const;
  const TripleSponsorEntry* find_triple(int center) const;
  bool sponsors_triple(int vertex, int center) const;
};

// Builds the sponsor forests.  Every tree is rooted at its minimum-id
// degree-D vertex; a 2-path is sponsored by the endpoint farther from the
// root, and a (1,1,1)-vertex by the far ends of its two non-root legs.
// Throws GraphError if the graph contains any configuration that breaks the
// forest shape (2-path loops/weak ends/cycles, coincident/weak/cyclic
// (1,1,1) structures), naming the offending kind.
SponsorAssignment build_sponsorship(const Graph& g, int D);

// Same election restricted to qualifying substructures (2-paths between two
// degree-D endpoints, (1,1,1)-vertices with three distinct degree-D far
// endpoints), skipping the precondition; cycles are tolerated by electing
// sponsors along a BFS forest.  Lets charge audits run on arbitrary inputs.
SponsorAssignment build_sponsorship_lenient(const Graph& g, int D);

}  // namespace dist2
