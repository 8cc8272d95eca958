#include "dist2/configurations.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "dist2/paths.hpp"
#include "masked.hpp"

namespace dist2 {

const char* config_kind_name(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::low_degree: return "LowDegree";
    case ConfigKind::long_path: return "LongPath";
    case ConfigKind::two_path_loop: return "TwoPathLoop";
    case ConfigKind::two_path_weak_end: return "TwoPathWeakEnd";
    case ConfigKind::two_path_cycle: return "TwoPathCycle";
    case ConfigKind::triple_coincident: return "TripleCoincident";
    case ConfigKind::triple_weak_end: return "TripleWeakEnd";
    case ConfigKind::triple_cycle: return "TripleCycle";
    case ConfigKind::deg3_two_ones_weak_end: return "Deg3TwoOnesWeakEnd";
    case ConfigKind::weird_delta_vertex: return "WeirdDeltaVertex";
    case ConfigKind::deg3_one_one_weak_end_b: return "Deg3OneOneWeakEnd_B";
    case ConfigKind::quad_ones_two_weak_ends_b: return "QuadOnesTwoWeakEnds_B";
  }
  return "?";
}

int config_priority(ConfigKind kind) { return (int)kind; }

namespace {

// A vertex of degree 3 whose three chains are all 1-paths ending at branch
// vertices; returns the legs (by neighbor id) if so.
std::optional<std::vector<IncidentPath>> triple_one_legs(
    const Graph& g, const std::vector<char>& alive, int v) {
  if (masked::degree(g, alive, v) != 3) return std::nullopt;
  auto ips = incident_paths(g, alive, v);
  for (const auto& p : ips)
    if (p.k != 1 || !p.far_branch) return std::nullopt;
  return ips;
}

// Cycle basis of a multigraph: edges are scanned in order, and every edge
// that closes a cycle in the growing forest yields the (unique) tree path
// plus itself.  nodes[i] --edges[i]-- nodes[i+1], last edge closing back.
struct BasisCycle {
  std::vector<int> nodes;
  std::vector<int> edges;
};

class CycleBasis {
 public:
  explicit CycleBasis(int n) : parent_(n, -1), tree_adj_(n) {}

  // Returns the cycle closed by edge `id` joining a,b; nullopt if it extends
  // the forest instead.
  std::optional<BasisCycle> add_edge(int a, int b, int id) {
    if (find(a) != find(b)) {
      parent_[find(a)] = find(b);
      tree_adj_[a].push_back({b, id});
      tree_adj_[b].push_back({a, id});
      return std::nullopt;
    }
    BasisCycle cyc;
    // Unique tree path a -> b.
    std::vector<int> prev_node(parent_.size(), -2), prev_edge(parent_.size());
    std::queue<int> q;
    prev_node[a] = -1;
    q.push(a);
    while (prev_node[b] == -2) {
      int x = q.front();
      q.pop();
      for (auto [y, e] : tree_adj_[x])
        if (prev_node[y] == -2) {
          prev_node[y] = x;
          prev_edge[y] = e;
          q.push(y);
        }
    }
    for (int x = b; x != a; x = prev_node[x]) {
      cyc.nodes.push_back(x);
      cyc.edges.push_back(prev_edge[x]);
    }
    cyc.nodes.push_back(a);
    std::reverse(cyc.nodes.begin(), cyc.nodes.end());
    std::reverse(cyc.edges.begin(), cyc.edges.end());
    cyc.edges.push_back(id);  // closes nodes.back() -> nodes.front()
    return cyc;
  }

 private:
  std::vector<int> parent_;
  std::vector<std::vector<std::pair<int, int>>> tree_adj_;

  int find(int x) {
    while (parent_[x] != -1) x = parent_[x];
    return x;
  }
};

// Rotations of a basis cycle: both directions, each rotated so that an
// admissible node sits first; the caller picks the smaller rendering.
std::vector<BasisCycle> cycle_orientations(const BasisCycle& cyc,
                                           const std::vector<char>& admissible_start) {
  int len = (int)cyc.nodes.size();
  int start = -1;
  for (int i = 0; i < len; ++i) {
    if (!admissible_start[i]) continue;
    if (start == -1 || cyc.nodes[i] < cyc.nodes[start]) start = i;
  }
  BasisCycle fwd, bwd;
  for (int i = 0; i < len; ++i) {
    int j = (start + i) % len;
    fwd.nodes.push_back(cyc.nodes[j]);
    fwd.edges.push_back(cyc.edges[j]);
    int r = (start - i + len) % len;
    bwd.nodes.push_back(cyc.nodes[r]);
    bwd.edges.push_back(cyc.edges[(r - 1 + len) % len]);
  }
  return {fwd, bwd};
}

struct Detector {
  const Graph& g;
  const std::vector<char>& alive;
  RegimeLabel regime;
  int D;
  std::vector<Configuration> out;

  void emit(ConfigKind kind, std::vector<int> witness,
            std::vector<int> deletable) {
    out.push_back({kind, std::move(witness), std::move(deletable)});
  }

  int deg(int v) const { return masked::degree(g, alive, v); }

  void run() {
    PathDecomposition dec = classify_paths(g, alive);

    // LowDegree: any vertex of degree <= 1.
    for (int v = 0; v < g.vertex_count(); ++v)
      if (alive[v] && deg(v) <= 1) emit(ConfigKind::low_degree, {v}, {v});

    // Chain-shaped kinds straight off the decomposition.
    for (const auto& p : dec.paths) {
      if (p.k() >= 3) {
        int v4 = p.k() >= 4 ? p.internals[3] : p.v;
        emit(ConfigKind::long_path,
             {p.u, p.internals[0], p.internals[1], p.internals[2], v4},
             {p.internals[0], p.internals[1], p.internals[2]});
      } else if (p.k() == 2 && p.loop) {
        emit(ConfigKind::two_path_loop,
             {p.u, p.internals[0], p.internals[1], p.u},
             {p.internals[0], p.internals[1]});
      } else if (p.k() == 2 && (deg(p.u) < D || deg(p.v) < D)) {
        // Orient the weak endpoint last.
        if (deg(p.v) < D)
          emit(ConfigKind::two_path_weak_end,
               {p.u, p.internals[0], p.internals[1], p.v},
               {p.internals[0], p.internals[1]});
        else
          emit(ConfigKind::two_path_weak_end,
               {p.v, p.internals[1], p.internals[0], p.u},
               {p.internals[1], p.internals[0]});
      }
    }

    detect_two_path_cycles(dec);
    detect_triples();
    detect_triple_cycles();
    detect_deg3_two_ones();
    detect_weird_delta();
    if (regime == RegimeLabel::B) {
      detect_deg3_one_one_b();
      detect_quad_ones_b();
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const Configuration& a, const Configuration& b) {
                       if (a.kind != b.kind)
                         return config_priority(a.kind) < config_priority(b.kind);
                       return a.witness < b.witness;
                     });
  }

  void detect_two_path_cycles(const PathDecomposition& dec) {
    std::vector<const KPath*> paths;
    for (const auto& p : dec.paths)
      if (p.k() == 2 && !p.loop) paths.push_back(&p);
    CycleBasis basis(g.vertex_count());
    for (int id = 0; id < (int)paths.size(); ++id) {
      auto cyc = basis.add_edge(paths[id]->u, paths[id]->v, id);
      if (!cyc) continue;
      std::vector<char> any_start(cyc->nodes.size(), 1);
      std::vector<int> best_witness;
      for (const auto& orient : cycle_orientations(*cyc, any_start)) {
        std::vector<int> w;
        for (size_t i = 0; i < orient.nodes.size(); ++i) {
          const KPath& p = *paths[orient.edges[i]];
          w.push_back(orient.nodes[i]);
          if (p.u == orient.nodes[i]) {
            w.push_back(p.internals[0]);
            w.push_back(p.internals[1]);
          } else {
            w.push_back(p.internals[1]);
            w.push_back(p.internals[0]);
          }
        }
        if (best_witness.empty() || w < best_witness) best_witness = w;
      }
      std::vector<int> deletable;
      for (size_t i = 0; i < best_witness.size(); ++i)
        if (i % 3 != 0) deletable.push_back(best_witness[i]);
      emit(ConfigKind::two_path_cycle, best_witness, deletable);
    }
  }

  void detect_triples() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v]) continue;
      auto legs = triple_one_legs(g, alive, v);
      if (!legs) continue;
      const auto& l = *legs;
      // Two legs reaching the same endpoint take precedence.
      int ci = -1, cj = -1;
      for (int i = 0; i < 3 && ci == -1; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (l[i].far == l[j].far) {
            ci = i;
            cj = j;
            break;
          }
      if (ci != -1) {
        int rest = 3 - ci - cj;
        emit(ConfigKind::triple_coincident,
             {v, l[ci].first, l[cj].first, l[rest].first},
             {v, l[ci].first, l[cj].first, l[rest].first});
        continue;
      }
      int weak = -1;
      for (int i = 0; i < 3; ++i)
        if (deg(l[i].far) < D && weak == -1) weak = i;
      if (weak != -1) {
        std::vector<int> others;
        for (int i = 0; i < 3; ++i)
          if (i != weak) others.push_back(l[i].first);
        emit(ConfigKind::triple_weak_end,
             {v, l[weak].first, others[0], others[1]},
             {v, l[weak].first, others[0], others[1]});
      }
    }
  }

  void detect_triple_cycles() {
    // Multigraph: centers joined to their degree-D far endpoints, one edge
    // per leg; every independent cycle is reducible.
    struct Leg {
      int center, far, mid;
    };
    std::vector<Leg> legs;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v]) continue;
      auto tl = triple_one_legs(g, alive, v);
      if (!tl) continue;
      for (const auto& p : *tl)
        // The far end must be a plain degree-D endpoint; when D is as small
        // as 3 a center could otherwise double as an endpoint and break the
        // alternating witness layout.
        if (deg(p.far) == D && !triple_one_legs(g, alive, p.far))
          legs.push_back({v, p.far, p.first});
    }
    CycleBasis basis(g.vertex_count());
    for (int id = 0; id < (int)legs.size(); ++id) {
      auto cyc = basis.add_edge(legs[id].center, legs[id].far, id);
      if (!cyc) continue;
      int centers = 0;
      for (int x : cyc->nodes) centers += deg(x) == 3 ? 1 : 0;
      if (centers < 2) continue;  // two legs to one endpoint: coincident kind
      std::vector<char> endpoint_start(cyc->nodes.size());
      for (size_t i = 0; i < cyc->nodes.size(); ++i)
        endpoint_start[i] = deg(cyc->nodes[i]) == D ? 1 : 0;
      std::vector<int> best_witness;
      for (const auto& orient : cycle_orientations(*cyc, endpoint_start)) {
        std::vector<int> w;
        for (size_t i = 0; i < orient.nodes.size(); ++i) {
          w.push_back(orient.nodes[i]);
          w.push_back(legs[orient.edges[i]].mid);
        }
        if (best_witness.empty() || w < best_witness) best_witness = w;
      }
      std::vector<int> deletable;
      for (size_t i = 0; i < best_witness.size(); ++i)
        if (i % 4 != 0) deletable.push_back(best_witness[i]);
      emit(ConfigKind::triple_cycle, best_witness, deletable);
    }
  }

  void detect_deg3_two_ones() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v] || deg(v) != 3) continue;
      auto ips = incident_paths(g, alive, v);
      std::vector<const IncidentPath*> ones, zeros;
      bool shape_ok = true;
      for (const auto& p : ips) {
        if (!p.far_branch) {
          shape_ok = false;
          break;
        }
        if (p.k == 1)
          ones.push_back(&p);
        else if (p.k == 0)
          zeros.push_back(&p);
        else
          shape_ok = false;
      }
      if (!shape_ok || ones.size() != 2 || zeros.size() != 1) continue;
      int z = zeros[0]->far;
      if (deg(z) < 3 || deg(z) > D - 3) continue;
      const IncidentPath* weak = nullptr;
      for (const auto* p : ones)
        if (deg(p->far) < D && !weak) weak = p;
      if (!weak) continue;
      const IncidentPath* other = ones[0] == weak ? ones[1] : ones[0];
      emit(ConfigKind::deg3_two_ones_weak_end,
           {v, weak->first, other->first, weak->far},
           {v, weak->first, other->first});
    }
  }

  void detect_weird_delta() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v] || deg(v) != D) continue;
      auto ips = incident_paths(g, alive, v);
      const IncidentPath* two_path = nullptr;
      const IncidentPath* triple_leg = nullptr;
      bool ok = true;
      for (const auto& p : ips) {
        if (p.k == 0) {  // a direct branch neighbor disqualifies
          ok = false;
          break;
        }
        if (p.k == 1 && deg(p.far) > 3) {  // every 1-leg must end at a 3--vertex
          ok = false;
          break;
        }
        if (p.k == 2 && !p.loop && !two_path) two_path = &p;
        if (p.k == 1 && !triple_leg && triple_one_legs(g, alive, p.far))
          triple_leg = &p;
      }
      if (!ok || !two_path || !triple_leg) continue;
      std::vector<int> witness = {v, two_path->first, two_path->internals[1],
                                  two_path->far, triple_leg->first,
                                  triple_leg->far};
      for (int w : g.neighbors(v))
        if (alive[w] && w != two_path->first && w != triple_leg->first)
          witness.push_back(w);
      std::vector<int> deletable = {v};
      for (int w : g.neighbors(v))
        if (alive[w]) deletable.push_back(w);
      deletable.push_back(two_path->internals[1]);
      emit(ConfigKind::weird_delta_vertex, witness, deletable);
    }
  }

  void detect_deg3_one_one_b() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v] || deg(v) != 3) continue;
      auto ips = incident_paths(g, alive, v);
      std::vector<const IncidentPath*> ones, zeros;
      bool shape_ok = true;
      for (const auto& p : ips) {
        if (!p.far_branch) {
          shape_ok = false;
          break;
        }
        if (p.k == 1)
          ones.push_back(&p);
        else if (p.k == 0)
          zeros.push_back(&p);
        else
          shape_ok = false;
      }
      if (!shape_ok || ones.size() != 1 || zeros.size() != 2) continue;
      if (deg(zeros[0]->far) > 4 || deg(zeros[1]->far) > 4) continue;
      if (deg(ones[0]->far) >= D) continue;
      int z1 = std::min(zeros[0]->far, zeros[1]->far);
      int z2 = std::max(zeros[0]->far, zeros[1]->far);
      emit(ConfigKind::deg3_one_one_weak_end_b,
           {v, ones[0]->first, ones[0]->far, z1, z2}, {ones[0]->first});
    }
  }

  void detect_quad_ones_b() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v] || deg(v) != 4) continue;
      auto ips = incident_paths(g, alive, v);
      bool shape_ok = true;
      for (const auto& p : ips)
        if (p.k != 1 || !p.far_branch) {
          shape_ok = false;
          break;
        }
      if (!shape_ok) continue;
      std::vector<int> weak_legs, strong_legs;
      for (const auto& p : ips)
        (deg(p.far) <= D - 2 ? weak_legs : strong_legs).push_back(p.first);
      if (weak_legs.size() < 2) continue;
      std::vector<int> ordered = {weak_legs[0], weak_legs[1]};
      for (size_t i = 2; i < weak_legs.size(); ++i)
        strong_legs.push_back(weak_legs[i]);
      std::sort(strong_legs.begin(), strong_legs.end());
      ordered.insert(ordered.end(), strong_legs.begin(), strong_legs.end());
      emit(ConfigKind::quad_ones_two_weak_ends_b,
           {v, ordered[0], ordered[1], ordered[2], ordered[3]},
           {v, ordered[0], ordered[1], ordered[2], ordered[3]});
    }
  }
};

}  // namespace

std::vector<Configuration> find_configurations(const Graph& g,
                                               RegimeLabel regime, int D,
                                               const std::vector<char>& alive,
                                               bool check_pre) {
  if (check_pre) {
    int dmin = regime == RegimeLabel::A ? 6 : 10;
    if (D < dmin)
      throw GraphError("find_configurations: D=" + std::to_string(D) +
                       " below regime minimum " + std::to_string(dmin));
    for (int v = 0; v < g.vertex_count(); ++v)
      if (alive[v] && masked::degree(g, alive, v) > D)
        throw GraphError("find_configurations: vertex " + std::to_string(v) +
                         " has degree above D=" + std::to_string(D));
  }
  Detector det{g, alive, regime, D, {}};
  det.run();
  return std::move(det.out);
}

std::vector<Configuration> find_configurations(const Graph& g,
                                               RegimeLabel regime, int D) {
  return find_configurations(g, regime, D, masked::all_alive(g), true);
}

}  // namespace dist2
