#include "dist2/analysis.hpp"

#include <algorithm>
#include <queue>

#include "dist2/maxflow.hpp"

namespace dist2 {

Graph square_graph(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
      for (int w : g.neighbors(v))
        if (u < w) edges.emplace_back(u, w);
    }
  }
  return Graph::from_edges(n, edges);
}

DistanceProfile two_distance_profile(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<char> seen(g.vertex_count(), 0);
  seen[v] = 1;
  std::vector<int> out;
  for (int w : g.neighbors(v)) {
    if (!seen[w]) {
      seen[w] = 1;
      out.push_back(w);
    }
    for (int x : g.neighbors(w)) {
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  DistanceProfile p;
  p.vertex = v;
  p.two_distance_neighbors = std::move(out);
  p.d_star = (int)p.two_distance_neighbors.size();
  return p;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every root; a non-tree edge (x,y) seen from x witnesses a cycle
  // through the root of length dist[x] + dist[y] + 1.  The minimum over all
  // roots is exact, since a shortest cycle is seen from any of its vertices.
  int n = g.vertex_count();
  int best = INT32_MAX;
  std::vector<int> dist(n), parent(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[r] = 0;
    parent[r] = -1;
    q.push(r);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (2 * dist[x] >= best) break;  // no shorter cycle reachable
      for (int y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == INT32_MAX) return std::nullopt;
  return best;
}

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0)
    throw GraphError("average_degree: empty graph");
  return Rational(2 * g.edge_count(), g.vertex_count());
}

Rational mad_bruteforce(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw GraphError("mad_bruteforce: guarded to n <= 20");
  if (n == 0) throw GraphError("mad_bruteforce: empty graph");
  auto edges = g.edges();
  Rational best(0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int verts = __builtin_popcount(mask);
    int es = 0;
    for (auto [u, v] : edges)
      if ((mask >> u & 1) && (mask >> v & 1)) ++es;
    Rational ad(2LL * es, verts);
    if (best < ad) best = ad;
  }
  return best;
}

namespace {

// True iff some subgraph has |E(S)|/|S| > p/q, via min-cut on the standard
// density network: source -> each edge node (cap q), edge node -> both
// endpoints (unbounded), each vertex -> sink (cap p).  The finite cuts are
// exactly q*(m - |E(S)|) + p*|S| over vertex sets S, so
// maxflow < q*m  <=>  max_S (q*|E(S)| - p*|S|) > 0.
bool density_exceeds(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                     const Rational& guess) {
  int n = g.vertex_count();
  long long m = (long long)edges.size();
  long long p = guess.num, q = guess.den;
  long long inf = q * m + 1;
  MaxFlow mf(n + (int)m + 2);
  int s = n + (int)m, t = s + 1;
  for (int e = 0; e < (int)m; ++e) {
    mf.add_edge(s, n + e, q);
    mf.add_edge(n + e, edges[e].first, inf);
    mf.add_edge(n + e, edges[e].second, inf);
  }
  for (int v = 0; v < n; ++v) mf.add_edge(v, t, p);
  return mf.run(s, t) < q * m;
}

// Smallest-denominator rational in the closed interval [lo, hi], 0 <= lo <= hi
// (Stern-Brocot / continued-fraction descent).
Rational simplest_between(const Rational& lo, const Rational& hi) {
  long long fl = lo.floor();
  if (lo.is_integer()) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational lo_frac = lo - Rational(fl);
  Rational hi_frac = hi - Rational(fl);
  Rational inner = simplest_between(Rational(hi_frac.den, hi_frac.num),
                                    Rational(lo_frac.den, lo_frac.num));
  return Rational(fl) + Rational(inner.den, inner.num);
}

}  // namespace

Rational mad_exact(const Graph& g) {
  if (g.vertex_count() == 0) throw GraphError("mad_exact: empty graph");
  long long n = g.vertex_count();
  long long m = g.edge_count();
  if (m == 0) return Rational(0);
  auto edges = g.edges();

  // Densest-subgraph value is a rational with denominator <= n, and two such
  // values differ by at least 1/(n*(n-1)); shrink the search interval below
  // that gap, then snap to the unique candidate inside it.
  Rational lo(m, n);        // whole graph: density m/n is attained
  Rational hi(n, 2);        // any subgraph has |E(S)|/|S| <= (|S|-1)/2
  Rational gap(1, n * std::max(2LL, n) - n);  // 1/(n*(n-1)), n >= 2 here
  while (gap <= hi - lo) {
    Rational mid = (lo + hi) / Rational(2);
    if (density_exceeds(g, edges, mid))
      lo = mid;
    else
      hi = mid;
  }
  // Invariant: optimal density is in [lo, hi] (lo attained or exceeded, hi
  // never exceeded), so the snap below returns it exactly.
  Rational density = simplest_between(lo, hi);
  return density * Rational(2);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int r = 0; r < n; ++r) {
    if (comp[r] != -1) continue;
    std::vector<int> verts;
    std::queue<int> q;
    comp[r] = (int)out.size();
    q.push(r);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      verts.push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = comp[r];
          q.push(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

}  // namespace dist2
