#pragma once

#include <optional>
#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

// Palette-indexed vertex coloring; -1 marks an uncolored vertex.
struct Coloring {
  int k = 0;               // palette size, valid colors are 0..k-1
  std::vector<int> colors;

  bool total() const {
    for (int c : colors)
      if (c < 0) return false;
    return true;
  }
};

// A same-colored pair at distance <= 2 (u < v).
struct ColorViolation {
  int u = -1;
  int v = -1;
  int color = -1;
};

// All offending pairs; empty means c is a valid 2-distance coloring.  Throws
// GraphError when the assignment is partial, sized wrong, or uses a color
// outside the palette.
std::vector<ColorViolation> verify_coloring(const Graph& g, const Coloring& c);

// First-fit on the square graph in the given vertex order (a permutation of
// all vertices); nullopt when some vertex exhausts the palette.
std::optional<Coloring> greedy_color(const Graph& g, int k,
                                     const std::vector<int>& order);

// Greedy clique in the square graph; its size lower-bounds the 2-distance
// chromatic number.
std::vector<int> greedy_square_clique(const Graph& g);

struct ExactResult {
  bool exact = false;
  int lower_bound = 0;
  int upper_bound = 0;  // the 2-distance chromatic number when exact
  long long nodes = 0;  // branch nodes spent
  Coloring best;        // total coloring with upper_bound colors
};

// Exact 2-distance chromatic number by branch and bound over the square
// graph (saturation-guided vertex choice, greedy clique lower bound, clique
// pre-coloring).  Stops after node_budget branch nodes with exact == false
// and the bounds reached so far.
ExactResult exact_chi2(const Graph& g, long long node_budget = 10'000'000);

// Even cycle with a choice list per position.
struct ListInstance {
  std::vector<int> cycle;               // even length >= 4
  std::vector<std::vector<int>> lists;  // one per position, >= 2 distinct colors
};

// Picks one color per position so that cyclically adjacent positions differ;
// lists are trimmed to their two smallest distinct colors first.  Throws
// std::invalid_argument on malformed instances.
std::vector<int> color_even_cycle_lists(const ListInstance& inst);

}  // namespace dist2
