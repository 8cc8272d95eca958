#pragma once

#include <string>
#include <vector>

#include "dist2/coloring.hpp"
#include "dist2/configurations.hpp"
#include "dist2/discharge.hpp"
#include "dist2/graph.hpp"

namespace dist2 {

// No reducible configuration and no 2-regular component left; what() carries
// the live max degree, live mad, and the regime hypothesis comparison.
struct IrreducibleError : GraphError {
  explicit IrreducibleError(const std::string& msg) : GraphError(msg) {}
};

// A scripted extension step found fewer available colors than the step's
// proven lower bound; indicates a detector/extension mismatch.
struct ExtensionContradictionError : GraphError {
  ConfigKind kind;
  int step;      // position in the extension script
  int vertex;
  int observed;  // available colors seen
  int required;  // bound that failed

  ExtensionContradictionError(ConfigKind k, int step_, int vertex_,
                              int observed_, int required_);
};

struct ReduceResult {
  Configuration configuration;  // in g's vertex ids
  Graph reduced;                // g minus the deletable set, compacted
  std::vector<int> old_ids;     // reduced id -> original id
};

// Removes the highest-priority configuration's deletable set.  Throws
// IrreducibleError when no configuration exists (2-regular components are
// handled by constructive_color, not here).
ReduceResult reduce_once(const Graph& g, const Regime& regime, int D);

// Re-colors cfg's deletable vertices inside g following the configuration's
// extension script.  partial must color exactly the non-deletable vertices
// with palette k = D + 2 (D is recovered as partial.k - 2); the result is
// total on g.  Two scripts additionally recolor one designated witness
// vertex that was never deleted: WeirdDeltaVertex recolors the far
// (1,1,1)-vertex (witness[5]) and Deg3OneOneWeakEnd_B recolors the center
// (witness[0]).  Throws ExtensionContradictionError when a script bound
// fails.
Coloring extend(const Graph& g, const Configuration& cfg,
                const Coloring& partial);

// Builds a 2-distance coloring with max_degree(g) + 2 colors by reducing to
// the empty graph and unwinding the extension scripts.  Attempts any input;
// graphs outside the regime hypotheses either still succeed or raise
// IrreducibleError / ExtensionContradictionError with diagnostics.
Coloring constructive_color(const Graph& g, const Regime& regime);

}  // namespace dist2
