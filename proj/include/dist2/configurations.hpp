#pragma once

#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

enum class RegimeLabel { A, B };

// Reducible configurations.  Enumerator order is detection priority: the
// reducer always fires the first kind present, scanning witnesses in
// ascending id order within a kind.
enum class ConfigKind {
  low_degree,                 // vertex of degree <= 1
  long_path,                  // chain with >= 3 internals
  two_path_loop,              // 2-path whose endpoints coincide
  two_path_weak_end,          // 2-path with an endpoint of degree < D
  two_path_cycle,             // cycle formed by 2-paths between D-vertices
  triple_coincident,          // (1,1,1)-vertex with two legs to one endpoint
  triple_weak_end,            // (1,1,1)-vertex with a far endpoint of degree < D
  triple_cycle,               // cycle through (1,1,1)-vertices and endpoints
  deg3_two_ones_weak_end,     // (1,1,0)-vertex, 0-neighbor of degree <= D-3,
                              //   some far endpoint of degree < D
  weird_delta_vertex,         // D-vertex with only 1+-chains, a 2-path, a
                              //   (1,1,1)-leg, and all 1-legs ending at
                              //   3--vertices
  deg3_one_one_weak_end_b,    // regime B: (1,0,0)-vertex, both 0-neighbors of
                              //   degree <= 4, far endpoint of degree < D
  quad_ones_two_weak_ends_b,  // regime B: (1,1,1,1)-vertex with >= 2 far
                              //   endpoints of degree <= D-2
};

const char* config_kind_name(ConfigKind kind);
int config_priority(ConfigKind kind);

// Witness layouts (fixed; the extension step decodes them positionally):
//   low_degree:            [v]                          deletable [v]
//   long_path:             [v0,v1,v2,v3,v4]             deletable [v1,v2,v3]
//   two_path_loop:         [v0,v1,v2,v0]                deletable [v1,v2]
//   two_path_weak_end:     [v0,v1,v2,v3], d(v3) < D     deletable [v1,v2]
//   two_path_cycle:        [e0,i0,i0',e1,i1,i1',...]    deletable = internals
//   triple_coincident:     [u,u1,u2,u3], far(u1)=far(u2)  deletable all four
//   triple_weak_end:       [u,u1,u2,u3], far(u1) weak     deletable all four
//   triple_cycle:          [e0,m0,c0,m0',e1,m1,c1,...]  deletable = non-e's
//   deg3_two_ones_weak_end:[u,u1,u2,v], v = far(u1) weak  deletable [u,u1,u2]
//   weird_delta_vertex:    [u,uD,uD',vD,uA,vA,rest...]  deletable [u]+N(u)+[uD']
//     (uD-uD'-vD the chosen 2-path, uA-vA the chosen (1,1,1)-leg)
//   deg3_one_one_weak_end_b: [u,v,w,z1,z2], w = far      deletable [v]
//   quad_ones_two_weak_ends_b: [u,u1,u2,u3,u4], far(u1),
//     far(u2) the weak ends                             deletable all five
struct Configuration {
  ConfigKind kind;
  std::vector<int> witness;
  std::vector<int> deletable;
};

// All configuration occurrences, sorted by (priority, witness).  Cycle kinds
// report one configuration per independent cycle of the underlying path
// structure (a cycle-space basis), not every walk.  Requires D >= max degree
// and D >= the regime's minimum (A: 6, B: 10).
std::vector<Configuration> find_configurations(const Graph& g,
                                               RegimeLabel regime, int D);

// Mask-aware variant used by the reduction engine; skips the D preconditions
// when check_pre is false (the engine audits hypotheses itself on failure).
std::vector<Configuration> find_configurations(const Graph& g,
                                               RegimeLabel regime, int D,
                                               const std::vector<char>& alive,
                                               bool check_pre);

}  // namespace dist2
