#include "dist2/sponsors.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "dist2/configurations.hpp"
#include "dist2/paths.hpp"
#include "masked.hpp"

namespace dist2 {

const TwoPathSponsorEntry* SponsorAssignment::find_two_path(
    int internal_vertex) const {
  for (const auto& e : two_paths)
    if (e.a == internal_vertex || e.b == internal_vertex) return &e;
  return nullptr;
}

const TripleSponsorEntry* SponsorAssignment::find_triple(int center) const {
  for (const auto& e : triples)
    if (e.center == center) return &e;
  return nullptr;
}

bool SponsorAssignment::sponsors_triple(int vertex, int center) const {
  const TripleSponsorEntry* e = find_triple(center);
  return e && (e->sponsor1 == vertex || e->sponsor2 == vertex);
}

namespace {

// BFS distances from the minimum-id degree-D node of each component of a
// multigraph given by its edge list; also labels components.
struct ForestRooting {
  std::vector<int> dist, comp, roots;
};

ForestRooting root_components(int n, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<char>& is_node,
                              const std::vector<char>& root_eligible) {
  ForestRooting fr;
  fr.dist.assign(n, -1);
  fr.comp.assign(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Component discovery in ascending id order keeps tree numbering stable.
  std::vector<int> comp_of(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!is_node[v] || comp_of[v] != -1) continue;
    int c = (int)fr.roots.size();
    std::vector<int> members;
    std::queue<int> q;
    comp_of[v] = c;
    q.push(v);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      members.push_back(x);
      for (int y : adj[x])
        if (comp_of[y] == -1) {
          comp_of[y] = c;
          q.push(y);
        }
    }
    int root = -1;
    for (int x : members)
      if (root_eligible[x] && (root == -1 || x < root)) root = x;
    if (root == -1) root = *std::min_element(members.begin(), members.end());
    fr.roots.push_back(root);
    std::queue<int> bq;
    fr.dist[root] = 0;
    bq.push(root);
    while (!bq.empty()) {
      int x = bq.front();
      bq.pop();
      fr.comp[x] = c;
      for (int y : adj[x])
        if (fr.dist[y] == -1) {
          fr.dist[y] = fr.dist[x] + 1;
          bq.push(y);
        }
    }
  }
  return fr;
}

SponsorAssignment build(const Graph& g, int D) {
  auto alive = masked::all_alive(g);
  SponsorAssignment s;
  s.D = D;
  int n = g.vertex_count();

  // --- 2-path forest: endpoints joined by qualifying 2-paths. ---
  std::vector<const KPath*> qualifying;
  PathDecomposition dec = classify_paths(g);
  for (const auto& p : dec.paths)
    if (p.k() == 2 && !p.loop && g.degree(p.u) == D && g.degree(p.v) == D)
      qualifying.push_back(&p);

  std::vector<char> is_node(n, 0), eligible(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (const auto* p : qualifying) {
    is_node[p->u] = is_node[p->v] = 1;
    eligible[p->u] = eligible[p->v] = 1;
    edges.emplace_back(p->u, p->v);
  }
  ForestRooting fr = root_components(n, edges, is_node, eligible);
  for (int r : fr.roots) s.two_path_roots.push_back(r);
  for (const auto* p : qualifying) {
    int sponsor;
    if (fr.dist[p->u] != fr.dist[p->v])
      sponsor = fr.dist[p->u] > fr.dist[p->v] ? p->u : p->v;
    else
      sponsor = std::max(p->u, p->v);  // only reachable on cyclic inputs
    s.two_paths.push_back(
        {p->u, p->internals[0], p->internals[1], p->v, sponsor, fr.comp[p->u]});
  }

  // --- (1,1,1) forest: centers joined to their far endpoints by legs. ---
  struct CenterLegs {
    int center;
    std::vector<IncidentPath> legs;
  };
  std::vector<CenterLegs> centers;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 3) continue;
    auto ips = incident_paths(g, v);
    bool ok = true;
    for (const auto& p : ips)
      if (p.k != 1 || !p.far_branch || g.degree(p.far) != D ||
          masked::degree(g, alive, p.far) == 3)
        ok = false;
    if (!ok) continue;
    if (ips[0].far == ips[1].far || ips[0].far == ips[2].far ||
        ips[1].far == ips[2].far)
      continue;
    centers.push_back({v, ips});
  }

  std::vector<char> t_node(n, 0), t_eligible(n, 0);
  std::vector<std::pair<int, int>> t_edges;
  for (const auto& c : centers) {
    t_node[c.center] = 1;
    for (const auto& leg : c.legs) {
      t_node[leg.far] = 1;
      t_eligible[leg.far] = 1;
      t_edges.emplace_back(c.center, leg.far);
    }
  }
  ForestRooting tfr = root_components(n, t_edges, t_node, t_eligible);
  for (int r : tfr.roots) s.triple_roots.push_back(r);
  for (const auto& c : centers) {
    // Parent leg: the far endpoint one BFS level closer to the root; on
    // cyclic inputs several legs may tie, so take the smallest id.
    int root_side = -1;
    for (const auto& leg : c.legs)
      if (tfr.dist[leg.far] == tfr.dist[c.center] - 1 &&
          (root_side == -1 || leg.far < root_side))
        root_side = leg.far;
    if (root_side == -1) root_side = c.legs[0].far;  // center is unreachable root
    std::vector<int> sp;
    for (const auto& leg : c.legs)
      if (leg.far != root_side) sp.push_back(leg.far);
    std::sort(sp.begin(), sp.end());
    s.triples.push_back(
        {c.center, root_side, sp[0], sp[1], tfr.comp[c.center]});
  }
  return s;
}

}  // namespace

SponsorAssignment build_sponsorship_lenient(const Graph& g, int D) {
  return build(g, D);
}

SponsorAssignment build_sponsorship(const Graph& g, int D) {
  auto configs =
      find_configurations(g, RegimeLabel::A, D, masked::all_alive(g), false);
  for (const auto& c : configs) {
    switch (c.kind) {
      case ConfigKind::two_path_loop:
      case ConfigKind::two_path_weak_end:
      case ConfigKind::two_path_cycle:
      case ConfigKind::triple_coincident:
      case ConfigKind::triple_weak_end:
      case ConfigKind::triple_cycle:
        throw GraphError(std::string("build_sponsorship: graph contains a ") +
                         config_kind_name(c.kind) + " configuration");
      default:
        break;
    }
  }
  return build(g, D);
}

}  // namespace dist2
