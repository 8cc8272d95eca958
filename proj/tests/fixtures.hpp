#pragma once

// Hand-built graphs exercising exactly one reducible configuration each.
// Branch vertices are padded to their target degrees with small cliques so
// no accidental leaf / chain / low-degree structure sneaks in; cliques are
// far denser than the sparse regimes, which is irrelevant for detection and
// for extension round-trips (those only need the declared D and a palette).

#include <string>
#include <utility>
#include <vector>

#include "dist2/configurations.hpp"
#include "dist2/graph.hpp"

namespace fixtures {

struct Builder {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int vertex() { return n++; }

  void edge(int u, int v) { edges.emplace_back(u, v); }

  // complete graph on `count` fresh vertices
  std::vector<int> clique(int count) {
    std::vector<int> ids;
    for (int i = 0; i < count; ++i) ids.push_back(vertex());
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j) edge(ids[i], ids[j]);
    return ids;
  }

  // joins v to `links` members of a fresh clique of size `clique_size`,
  // raising degree(v) by `links` without creating 2-vertices or leaves
  std::vector<int> pad(int v, int clique_size, int links) {
    std::vector<int> ids = clique(clique_size);
    for (int i = 0; i < links; ++i) edge(v, ids[(size_t)i]);
    return ids;
  }

  // chain of k fresh degree-2 vertices from u to v; returns the internals
  std::vector<int> chain(int u, int v, int k) {
    std::vector<int> ids;
    int prev = u;
    for (int i = 0; i < k; ++i) {
      int w = vertex();
      ids.push_back(w);
      edge(prev, w);
      prev = w;
    }
    edge(prev, v);
    return ids;
  }

  dist2::Graph build() const { return dist2::Graph::from_edges(n, edges); }
};

struct ConfigFixture {
  std::string name;
  dist2::RegimeLabel regime;
  int D;
  dist2::ConfigKind kind;
  dist2::Graph g;
  std::vector<int> witness;    // expected exact layout; empty = skip check
  std::vector<int> deletable;  // expected as a set
};

inline ConfigFixture low_degree_fx() {
  // leaf hanging off a K4
  Builder b;
  auto k4 = b.clique(4);
  int leaf = b.vertex();
  b.edge(k4[0], leaf);
  return {"low_degree", dist2::RegimeLabel::A, 6, dist2::ConfigKind::low_degree,
          b.build(), {leaf}, {leaf}};
}

inline ConfigFixture long_path_fx() {
  // K4 -- i0 i1 i2 -- K4
  Builder b;
  auto left = b.clique(4);
  auto right = b.clique(4);
  auto mid = b.chain(left[0], right[0], 3);
  return {"long_path", dist2::RegimeLabel::A, 6, dist2::ConfigKind::long_path,
          b.build(), {left[0], mid[0], mid[1], mid[2], right[0]},
          {mid[0], mid[1], mid[2]}};
}

inline ConfigFixture two_path_loop_fx() {
  Builder b;
  auto k4 = b.clique(4);
  auto loop = b.chain(k4[0], k4[0], 2);
  return {"two_path_loop", dist2::RegimeLabel::A, 6, dist2::ConfigKind::two_path_loop,
          b.build(), {k4[0], loop[0], loop[1], k4[0]}, {loop[0], loop[1]}};
}

inline ConfigFixture two_path_weak_end_fx() {
  // strong end: degree 6 (K6 + chain); weak end: degree 4 (K4 + chain)
  Builder b;
  auto strongc = b.clique(6);
  auto weakc = b.clique(4);
  auto mid = b.chain(strongc[0], weakc[0], 2);
  return {"two_path_weak_end", dist2::RegimeLabel::A, 6,
          dist2::ConfigKind::two_path_weak_end, b.build(),
          {strongc[0], mid[0], mid[1], weakc[0]}, {mid[0], mid[1]}};
}

inline ConfigFixture two_path_cycle_fx() {
  // two D-vertices joined by two parallel 2-paths
  Builder b;
  int u = b.vertex();
  int v = b.vertex();
  b.pad(u, 5, 4);
  b.pad(v, 5, 4);
  auto p0 = b.chain(u, v, 2);
  auto p1 = b.chain(u, v, 2);
  return {"two_path_cycle", dist2::RegimeLabel::A, 6,
          dist2::ConfigKind::two_path_cycle, b.build(), {},
          {p0[0], p0[1], p1[0], p1[1]}};
}

inline ConfigFixture triple_coincident_fx() {
  // center w, two legs to the same far endpoint x, third leg to y
  Builder b;
  int w = b.vertex();
  int x = b.vertex();
  int y = b.vertex();
  auto a = b.chain(w, x, 1);
  auto c = b.chain(w, x, 1);
  auto d = b.chain(w, y, 1);
  b.pad(x, 5, 4);  // degree 2 + 4 = 6
  b.pad(y, 6, 5);  // degree 1 + 5 = 6
  return {"triple_coincident", dist2::RegimeLabel::A, 6,
          dist2::ConfigKind::triple_coincident, b.build(),
          {w, a[0], c[0], d[0]}, {w, a[0], c[0], d[0]}};
}

inline ConfigFixture triple_weak_end_fx() {
  // center w, legs to strong x, strong y, weak z (degree 4)
  Builder b;
  int w = b.vertex();
  int x = b.vertex();
  int y = b.vertex();
  int z = b.vertex();
  auto a = b.chain(w, x, 1);
  auto c = b.chain(w, y, 1);
  auto d = b.chain(w, z, 1);
  b.pad(x, 6, 5);
  b.pad(y, 6, 5);
  b.pad(z, 4, 3);  // degree 4 < 6: weak
  return {"triple_weak_end", dist2::RegimeLabel::A, 6,
          dist2::ConfigKind::triple_weak_end, b.build(), {},
          {w, a[0], c[0], d[0]}};
}

inline ConfigFixture triple_cycle_fx() {
  // two (1,1,1)-centers sharing both far endpoints x and y
  Builder b;
  int x = b.vertex();
  int y = b.vertex();
  int c1 = b.vertex();
  int c2 = b.vertex();
  int z1 = b.vertex();
  int z2 = b.vertex();
  auto m1 = b.chain(c1, x, 1);
  auto m2 = b.chain(c1, y, 1);
  auto m3 = b.chain(c1, z1, 1);
  auto m4 = b.chain(c2, x, 1);
  auto m5 = b.chain(c2, y, 1);
  auto m6 = b.chain(c2, z2, 1);
  b.pad(x, 5, 4);
  b.pad(y, 5, 4);
  b.pad(z1, 6, 5);
  b.pad(z2, 6, 5);
  (void)m3;
  (void)m6;
  return {"triple_cycle", dist2::RegimeLabel::A, 6, dist2::ConfigKind::triple_cycle,
          b.build(), {}, {c1, c2, m1[0], m2[0], m4[0], m5[0]}};
}

inline ConfigFixture deg3_two_ones_weak_end_fx() {
  // v: legs v-a-ubig (strong), v-c-w (weak far, degree 4), direct edge v-z
  // with degree(z) = 3 <= D-3
  Builder b;
  int v = b.vertex();
  int ubig = b.vertex();
  int w = b.vertex();
  int z = b.vertex();
  auto a = b.chain(v, ubig, 1);
  auto c = b.chain(v, w, 1);
  b.edge(v, z);
  b.pad(ubig, 6, 5);
  b.pad(w, 4, 3);
  b.pad(z, 4, 2);
  return {"deg3_two_ones_weak_end", dist2::RegimeLabel::A, 6,
          dist2::ConfigKind::deg3_two_ones_weak_end, b.build(), {},
          {v, a[0], c[0]}};
}

inline ConfigFixture weird_delta_vertex_fx() {
  // D-vertex u with one 2-path, one leg to a (1,1,1)-vertex t, and four legs
  // to (1,0,0)-vertices of degree 3
  Builder b;
  int u = b.vertex();
  int v2 = b.vertex();  // far end of the 2-path, degree D
  int t = b.vertex();   // (1,1,1)-vertex
  auto p = b.chain(u, v2, 2);
  auto a = b.chain(u, t, 1);
  b.pad(v2, 6, 5);
  int tx = b.vertex();
  int ty = b.vertex();
  b.chain(t, tx, 1);
  b.chain(t, ty, 1);
  b.pad(tx, 6, 5);
  b.pad(ty, 6, 5);
  std::vector<int> cs;
  for (int i = 0; i < 4; ++i) {
    int wi = b.vertex();
    auto ci = b.chain(u, wi, 1);
    cs.push_back(ci[0]);
    b.pad(wi, 4, 2);  // degree 3, both pad neighbors of degree >= 4
  }
  ConfigFixture fx{"weird_delta_vertex", dist2::RegimeLabel::A, 6,
                   dist2::ConfigKind::weird_delta_vertex, b.build(), {}, {}};
  fx.deletable = {u, p[0], p[1], a[0], cs[0], cs[1], cs[2], cs[3]};
  return fx;
}

inline ConfigFixture deg3_one_one_weak_end_b_fx() {
  // regime B: v with one leg v-m-f (f of degree 9 < 10) and direct edges to
  // z1, z2 of degree 4
  Builder b;
  int v = b.vertex();
  int f = b.vertex();
  int z1 = b.vertex();
  int z2 = b.vertex();
  auto m = b.chain(v, f, 1);
  b.edge(v, z1);
  b.edge(v, z2);
  b.pad(f, 9, 8);
  b.pad(z1, 4, 3);
  b.pad(z2, 4, 3);
  return {"deg3_one_one_weak_end_b", dist2::RegimeLabel::B, 10,
          dist2::ConfigKind::deg3_one_one_weak_end_b, b.build(), {}, {m[0]}};
}

inline ConfigFixture quad_ones_two_weak_ends_b_fx() {
  // regime B: degree-4 vertex u, four 1-legs, two fars of degree 8 <= D-2
  Builder b;
  int u = b.vertex();
  int p = b.vertex();
  int q = b.vertex();
  int r = b.vertex();
  int s = b.vertex();
  auto a1 = b.chain(u, p, 1);
  auto a2 = b.chain(u, q, 1);
  auto a3 = b.chain(u, r, 1);
  auto a4 = b.chain(u, s, 1);
  b.pad(p, 8, 7);   // weak: 8 <= D-2
  b.pad(q, 8, 7);   // weak
  b.pad(r, 10, 9);  // strong: degree 10
  b.pad(s, 10, 9);  // strong
  return {"quad_ones_two_weak_ends_b", dist2::RegimeLabel::B, 10,
          dist2::ConfigKind::quad_ones_two_weak_ends_b, b.build(), {},
          {u, a1[0], a2[0], a3[0], a4[0]}};
}

inline std::vector<ConfigFixture> all_config_fixtures() {
  return {low_degree_fx(),
          long_path_fx(),
          two_path_loop_fx(),
          two_path_weak_end_fx(),
          two_path_cycle_fx(),
          triple_coincident_fx(),
          triple_weak_end_fx(),
          triple_cycle_fx(),
          deg3_two_ones_weak_end_fx(),
          weird_delta_vertex_fx(),
          deg3_one_one_weak_end_b_fx(),
          quad_ones_two_weak_ends_b_fx()};
}

}  // namespace fixtures
