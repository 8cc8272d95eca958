#include "dist2/paths.hpp"

#include <algorithm>

#include "masked.hpp"

namespace dist2 {

namespace {

// Walks the chain starting at terminal `from` through its neighbor `step`,
// collecting degree-2 internals until a vertex of degree != 2 is reached or
// the walk closes back at `from` (a 2-regular component).
IncidentPath walk_chain(const Graph& g, const std::vector<char>& alive,
                        int from, int step) {
  IncidentPath p;
  p.first = step;
  int prev = from, cur = step;
  while (masked::degree(g, alive, cur) == 2 && cur != from) {
    p.internals.push_back(cur);
    int next = -1;
    for (int w : g.neighbors(cur))
      if (alive[w] && w != prev) next = w;
    prev = cur;
    cur = next;
  }
  p.k = (int)p.internals.size();
  p.far = cur;
  p.far_branch = masked::degree(g, alive, cur) >= 3;
  p.loop = (cur == from);
  return p;
}

}  // namespace

std::vector<IncidentPath> incident_paths(const Graph& g,
                                         const std::vector<char>& alive,
                                         int v) {
  g.check_vertex(v);
  std::vector<IncidentPath> out;
  for (int w : g.neighbors(v))
    if (alive[w]) out.push_back(walk_chain(g, alive, v, w));
  return out;
}

std::vector<IncidentPath> incident_paths(const Graph& g, int v) {
  return incident_paths(g, masked::all_alive(g), v);
}

VertexSignature vertex_signature(const Graph& g, int v) {
  if (g.degree(v) < 3)
    throw GraphError("vertex_signature: vertex " + std::to_string(v) +
                     " has degree < 3");
  VertexSignature s;
  s.vertex = v;
  for (const auto& p : incident_paths(g, v)) s.ks.push_back(p.k);
  std::sort(s.ks.rbegin(), s.ks.rend());
  return s;
}

PathDecomposition classify_paths(const Graph& g,
                                 const std::vector<char>& alive) {
  int n = g.vertex_count();
  PathDecomposition dec;
  std::vector<char> consumed(n, 0);  // degree-2 vertices already on a chain

  for (int u = 0; u < n; ++u) {
    if (!alive[u] || masked::degree(g, alive, u) == 2) continue;
    for (int w : g.neighbors(u)) {
      if (!alive[w] || masked::degree(g, alive, w) != 2 || consumed[w]) continue;
      IncidentPath walk = walk_chain(g, alive, u, w);
      for (int x : walk.internals) consumed[x] = 1;
      // Both terminals must be branch vertices, else this is a dead-end
      // chain rather than a k-path.
      if (!walk.far_branch || masked::degree(g, alive, u) < 3) continue;
      KPath p;
      p.u = u;
      p.v = walk.far;
      p.internals = walk.internals;
      p.loop = walk.loop;
      // Canonical orientation: smaller endpoint first; for loops, the
      // lexicographically smaller internal sequence.
      bool flip = p.loop ? p.internals.front() > p.internals.back() : p.u > p.v;
      if (flip) {
        std::swap(p.u, p.v);
        std::reverse(p.internals.begin(), p.internals.end());
      }
      dec.paths.push_back(std::move(p));
    }
  }

  // Whatever degree-2 vertices remain live in components made only of
  // 2-vertices, i.e. bare cycles.
  for (int v = 0; v < n; ++v) {
    if (!alive[v] || consumed[v] || masked::degree(g, alive, v) != 2) continue;
    BareCycle cyc;
    int prev = -1, cur = v;
    do {
      consumed[cur] = 1;
      cyc.vertices.push_back(cur);
      int next = -1;
      for (int w : g.neighbors(cur)) {
        if (!alive[w] || w == prev) continue;
        if (next == -1 || w < next) next = w;  // canonical direction at start
      }
      prev = cur;
      cur = next;
    } while (cur != v);
    dec.bare_cycles.push_back(std::move(cyc));
  }

  std::sort(dec.paths.begin(), dec.paths.end(),
            [](const KPath& a, const KPath& b) {
              if (a.u != b.u) return a.u < b.u;
              if (a.v != b.v) return a.v < b.v;
              return a.internals < b.internals;
            });
  return dec;
}

PathDecomposition classify_paths(const Graph& g) {
  return classify_paths(g, masked::all_alive(g));
}

}  // namespace dist2
