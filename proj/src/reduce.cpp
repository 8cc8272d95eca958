#include "dist2/reduce.hpp"

#include <algorithm>
#include <utility>

#include "dist2/analysis.hpp"
#include "dist2/paths.hpp"
#include "masked.hpp"

namespace dist2 {

ExtensionContradictionError::ExtensionContradictionError(ConfigKind k,
                                                         int step_, int vertex_,
                                                         int observed_,
                                                         int required_)
    : GraphError(std::string("extension of ") + config_kind_name(k) +
                 " stuck at step " + std::to_string(step_) + ": vertex " +
                 std::to_string(vertex_) + " has " + std::to_string(observed_) +
                 " available colors, needs " + std::to_string(required_)),
      kind(k),
      step(step_),
      vertex(vertex_),
      observed(observed_),
      required(required_) {}

namespace {

// colors of live vertices within distance 2 of v, as a used-flag array
std::vector<int> available_colors(const Graph& g, const std::vector<char>& alive,
                                  const std::vector<int>& colors, int k, int v) {
  std::vector<char> used(k, 0);
  auto mark = [&](int w) {
    if (w != v && alive[w] && colors[w] >= 0 && colors[w] < k)
      used[colors[w]] = 1;
  };
  for (int w : g.neighbors(v)) {
    if (!alive[w]) continue;
    mark(w);
    for (int x : g.neighbors(w)) mark(x);
  }
  std::vector<int> out;
  for (int c = 0; c < k; ++c)
    if (!used[c]) out.push_back(c);
  return out;
}

struct Extender {
  const Graph& g;
  const std::vector<char>& alive;
  std::vector<int>& colors;
  int k;
  int D;
  ConfigKind kind;

  std::vector<int> avail(int v) const {
    return available_colors(g, alive, colors, k, v);
  }

  void check(int step, int v, int observed, int required) const {
    if (observed < required)
      throw ExtensionContradictionError(kind, step, v, observed, required);
  }

  // post-deletion list bounds, verified before any recoloring
  void assert_start(const std::vector<std::pair<int, int>>& bounds) const {
    for (int i = 0; i < (int)bounds.size(); ++i)
      check(i, bounds[i].first, (int)avail(bounds[i].first).size(),
            bounds[i].second);
  }

  void color_greedy(int step, int v, int required = 1) {
    std::vector<int> a = avail(v);
    check(step, v, (int)a.size(), std::max(1, required));
    colors[v] = a.front();
  }
};

void require_witness_size(const Configuration& cfg) {
  const size_t n = cfg.witness.size();
  bool ok = true;
  switch (cfg.kind) {
    case ConfigKind::low_degree: ok = n == 1; break;
    case ConfigKind::long_path: ok = n == 5; break;
    case ConfigKind::two_path_loop:
    case ConfigKind::two_path_weak_end:
    case ConfigKind::triple_coincident:
    case ConfigKind::triple_weak_end:
    case ConfigKind::deg3_two_ones_weak_end: ok = n == 4; break;
    case ConfigKind::two_path_cycle: ok = n >= 6 && n % 3 == 0; break;
    case ConfigKind::triple_cycle: ok = n >= 8 && n % 4 == 0; break;
    case ConfigKind::weird_delta_vertex: ok = n >= 6; break;
    case ConfigKind::deg3_one_one_weak_end_b:
    case ConfigKind::quad_ones_two_weak_ends_b: ok = n == 5; break;
  }
  if (!ok)
    throw GraphError(std::string("malformed ") + config_kind_name(cfg.kind) +
                     " witness of size " + std::to_string(n));
}

// Recolors cfg's deleted vertices inside the live subgraph.  colors must be
// defined on every live vertex outside the configuration.
void extend_config(const Graph& g, const std::vector<char>& alive,
                   const Configuration& cfg, std::vector<int>& colors, int k,
                   int D) {
  require_witness_size(cfg);
  Extender ex{g, alive, colors, k, D, cfg.kind};
  const std::vector<int>& w = cfg.witness;

  switch (cfg.kind) {
    case ConfigKind::low_degree: {
      int v = w[0];
      ex.assert_start({{v, masked::degree(g, alive, v) == 0 ? k : 2}});
      ex.color_greedy(0, v);
      break;
    }
    case ConfigKind::long_path: {
      ex.assert_start({{w[1], 2}, {w[3], 2}, {w[2], D}});
      ex.color_greedy(0, w[1]);
      ex.color_greedy(1, w[3]);
      ex.color_greedy(2, w[2]);
      break;
    }
    case ConfigKind::two_path_loop: {
      ex.assert_start({{w[1], 3}, {w[2], 3}});
      ex.color_greedy(0, w[1]);
      ex.color_greedy(1, w[2]);
      break;
    }
    case ConfigKind::two_path_weak_end: {
      // witness is oriented strong endpoint first, weak endpoint last
      ex.assert_start({{w[1], 1}, {w[2], 2}});
      ex.color_greedy(0, w[1]);
      ex.color_greedy(1, w[2]);
      break;
    }
    case ConfigKind::two_path_cycle: {
      // internals in traversal order form a chordless even cycle in the
      // square; their endpoints stay colored
      std::vector<int> cyc;
      for (size_t i = 0; i < w.size(); i += 3) {
        cyc.push_back(w[i + 1]);
        cyc.push_back(w[i + 2]);
      }
      ListInstance inst;
      inst.cycle = cyc;
      for (int i = 0; i < (int)cyc.size(); ++i) {
        std::vector<int> a = ex.avail(cyc[i]);
        ex.check(i, cyc[i], (int)a.size(), 2);
        inst.lists.push_back(std::move(a));
      }
      std::vector<int> chosen = color_even_cycle_lists(inst);
      for (int i = 0; i < (int)cyc.size(); ++i) colors[cyc[i]] = chosen[i];
      break;
    }
    case ConfigKind::triple_coincident: {
      ex.assert_start({{w[3], 2}, {w[1], 3}, {w[2], 3}, {w[0], D}});
      ex.color_greedy(0, w[3]);
      ex.color_greedy(1, w[1]);
      ex.color_greedy(2, w[2]);
      ex.color_greedy(3, w[0]);
      break;
    }
    case ConfigKind::triple_weak_end: {
      ex.assert_start({{w[3], 2}, {w[2], 2}, {w[1], 3}, {w[0], D - 1}});
      ex.color_greedy(0, w[3]);
      ex.color_greedy(1, w[2]);
      ex.color_greedy(2, w[1]);
      ex.color_greedy(3, w[0]);
      break;
    }
    case ConfigKind::triple_cycle: {
      // midpoints form a chordless even cycle in the square; centers keep at
      // most six forbidden colors once the midpoints are placed
      std::vector<int> mids, centers;
      for (size_t i = 0; i < w.size(); i += 4) {
        mids.push_back(w[i + 1]);
        centers.push_back(w[i + 2]);
        mids.push_back(w[i + 3]);
      }
      ListInstance inst;
      inst.cycle = mids;
      for (int i = 0; i < (int)mids.size(); ++i) {
        std::vector<int> a = ex.avail(mids[i]);
        ex.check(i, mids[i], (int)a.size(), 2);
        inst.lists.push_back(std::move(a));
      }
      std::vector<int> chosen = color_even_cycle_lists(inst);
      for (int i = 0; i < (int)mids.size(); ++i) colors[mids[i]] = chosen[i];
      for (int i = 0; i < (int)centers.size(); ++i)
        ex.color_greedy((int)mids.size() + i, centers[i], D - 4);
      break;
    }
    case ConfigKind::deg3_two_ones_weak_end: {
      // witness [u, u1, u2, v]: u1's far end v is weak; order u2, u1, u
      ex.assert_start({{w[2], 1}, {w[1], 2}, {w[0], 3}});
      ex.color_greedy(0, w[2]);
      ex.color_greedy(1, w[1]);
      ex.color_greedy(2, w[0]);
      break;
    }
    case ConfigKind::weird_delta_vertex: {
      // witness [u, uD, uD2, vD, uA, vA, others...]: uD-uD2 is the 2-path
      // toward vD, uA reaches the (1,1,1)-vertex vA, others are the
      // remaining neighbors of u in id order
      int u = w[0], uD = w[1], uD2 = w[2], uA = w[4], vA = w[5];
      colors[vA] = -1;  // scripted uncoloring
      std::vector<std::pair<int, int>> bounds = {
          {u, 4}, {uD2, 2}, {vA, D - 2}, {uA, D}, {uD, D + 1}};
      for (size_t i = 6; i < w.size(); ++i) bounds.push_back({(int)w[i], D - 1});
      ex.assert_start(bounds);

      // reserve uD2's two smallest colors; u must avoid them
      std::vector<int> l2 = ex.avail(uD2);
      int r0 = l2[0], r1 = l2[1];
      std::vector<int> au = ex.avail(u);
      int cu = -1, off_reserve = 0;
      for (int c : au)
        if (c != r0 && c != r1) {
          if (cu < 0) cu = c;
          ++off_reserve;
        }
      ex.check(0, u, off_reserve, 1);
      colors[u] = cu;

      int step = 1;
      for (size_t i = 6; i < w.size(); ++i) ex.color_greedy(step++, w[i]);
      ex.color_greedy(step++, uA);
      ex.color_greedy(step++, uD);
      ex.color_greedy(step++, vA);

      std::vector<int> a2 = ex.avail(uD2);
      int c2 = -1, in_reserve = 0;
      for (int c : a2)
        if (c == r0 || c == r1) {
          if (c2 < 0) c2 = c;
          ++in_reserve;
        }
      ex.check(step, uD2, in_reserve, 1);
      colors[uD2] = c2;
      break;
    }
    case ConfigKind::deg3_one_one_weak_end_b: {
      // witness [u, v, w, z1, z2]: only v was deleted; u is recolored last
      int u = w[0], v = w[1];
      colors[u] = -1;  // scripted uncoloring
      ex.color_greedy(0, v, 1);
      ex.color_greedy(1, u, std::max(1, D - 8));
      break;
    }
    case ConfigKind::quad_ones_two_weak_ends_b: {
      // witness [u, u1, u2, u3, u4]: u1 and u2 lead to the weak far ends
      ex.assert_start(
          {{w[3], 2}, {w[4], 2}, {w[1], 4}, {w[2], 4}, {w[0], D - 2}});
      ex.color_greedy(0, w[3]);
      ex.color_greedy(1, w[4]);
      ex.color_greedy(2, w[1]);
      ex.color_greedy(3, w[2]);
      ex.color_greedy(4, w[0]);
      break;
    }
  }
}

// 2-regular component in cycle order.  A cycle squares to colors repeating
// with period-sensitive patterns: 0,1,2 when the length is divisible by 3,
// otherwise 0,1,2,3 tail blocks; a lone 5-cycle is the one length that needs
// five colors.  Components never interact at distance 2, so the pattern is
// safe regardless of colors elsewhere.
void color_bare_cycle(const Graph&, const std::vector<char>&,
                      const std::vector<int>& cycle, std::vector<int>& colors,
                      int k) {
  const int n = (int)cycle.size();
  const int need = n == 5 ? 5 : (n % 3 == 0 ? 3 : 4);
  if (k < need)
    throw GraphError("a 2-regular component of " + std::to_string(n) +
                     " vertices needs " + std::to_string(need) +
                     " colors but the palette has only " + std::to_string(k) +
                     " (maximum degree below the regime minimum)");
  auto paint = [&](int tail4) {
    // 0,1,2 repeated, finishing with `tail4` blocks of 0,1,2,3
    int head = n - 4 * tail4;
    for (int i = 0; i < head; ++i) colors[cycle[i]] = i % 3;
    for (int i = head; i < n; ++i) colors[cycle[i]] = (i - head) % 4;
  };
  if (n == 5)
    for (int i = 0; i < 5; ++i) colors[cycle[i]] = i;
  else if (n % 3 == 0)
    paint(0);
  else if (n % 3 == 1)
    paint(1);
  else
    paint(2);
}

std::string irreducible_message(const Graph& g, const std::vector<char>& alive,
                                const Regime& regime, int D, int live) {
  int live_delta = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (alive[v]) live_delta = std::max(live_delta, masked::degree(g, alive, v));
  Graph sub = g.induced(alive);
  Rational live_mad = mad_exact(sub);
  std::string msg =
      "irreducible: no configuration and no 2-regular component among " +
      std::to_string(live) + " live vertices";
  msg += " (regime ";
  msg += regime_label_name(regime.label);
  msg += ": declared max degree " + std::to_string(D) + ", regime minimum " +
         std::to_string(regime.delta_min) + ", live max degree " +
         std::to_string(live_delta) + ", live mad " + live_mad.str() +
         ", bound " + regime.mad_bound.str() + ")";
  if (D < regime.delta_min)
    msg += "; hypothesis failure: max degree below regime minimum";
  if (!(live_mad < regime.mad_bound))
    msg += "; hypothesis failure: mad not below the bound";
  return msg;
}

struct EngineStep {
  bool cycle = false;
  Configuration cfg;          // set when !cycle
  std::vector<int> removed;   // cycle order for bare cycles
};

}  // namespace

ReduceResult reduce_once(const Graph& g, const Regime& regime, int D) {
  std::vector<Configuration> cfgs = find_configurations(g, regime.label, D);
  if (cfgs.empty()) {
    std::vector<char> alive(g.vertex_count(), 1);
    throw IrreducibleError(
        irreducible_message(g, alive, regime, D, g.vertex_count()));
  }
  ReduceResult r;
  r.configuration = cfgs.front();
  std::vector<char> keep(g.vertex_count(), 1);
  for (int v : r.configuration.deletable) keep[v] = 0;
  r.reduced = g.induced(keep, &r.old_ids);
  return r;
}

Coloring extend(const Graph& g, const Configuration& cfg,
                const Coloring& partial) {
  const int n = g.vertex_count();
  if ((int)partial.colors.size() != n)
    throw GraphError("extend: partial coloring covers " +
                     std::to_string(partial.colors.size()) +
                     " vertices, graph has " + std::to_string(n));
  const int k = partial.k;
  std::vector<char> deleted(n, 0);
  for (int v : cfg.deletable) {
    g.check_vertex(v);
    deleted[v] = 1;
  }
  for (int v : cfg.witness) g.check_vertex(v);
  for (int v = 0; v < n; ++v) {
    if (deleted[v] && partial.colors[v] != -1)
      throw GraphError("extend: deleted vertex " + std::to_string(v) +
                       " arrives colored");
    if (!deleted[v] && (partial.colors[v] < 0 || partial.colors[v] >= k))
      throw GraphError("extend: vertex " + std::to_string(v) +
                       " outside the configuration must carry a palette color");
  }
  Coloring out = partial;
  std::vector<char> alive(n, 1);
  extend_config(g, alive, cfg, out.colors, k, k - 2);
  return out;
}

Coloring constructive_color(const Graph& g, const Regime& regime) {
  const int n = g.vertex_count();
  const int D = g.max_degree();
  const int k = D + 2;

  std::vector<char> alive(n, 1);
  int live = n;
  std::vector<EngineStep> steps;

  while (live > 0) {
    std::vector<Configuration> cfgs =
        find_configurations(g, regime.label, D, alive, /*check_pre=*/false);
    EngineStep st;
    if (!cfgs.empty()) {
      st.cfg = std::move(cfgs.front());
      st.removed = st.cfg.deletable;
    } else {
      PathDecomposition dec = classify_paths(g, alive);
      if (dec.bare_cycles.empty())
        throw IrreducibleError(irreducible_message(g, alive, regime, D, live));
      st.cycle = true;
      st.removed = std::move(dec.bare_cycles.front().vertices);
    }
    for (int v : st.removed) {
      if (!alive[v])
        throw GraphError("internal error: reduction removed vertex " +
                         std::to_string(v) + " twice");
      alive[v] = 0;
      --live;
    }
    steps.push_back(std::move(st));
  }

  std::vector<int> colors(n, -1);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    for (int v : it->removed) alive[v] = 1;
    if (it->cycle)
      color_bare_cycle(g, alive, it->removed, colors, k);
    else
      extend_config(g, alive, it->cfg, colors, k, D);
  }

  Coloring out;
  out.k = k;
  out.colors = std::move(colors);
  return out;
}

}  // namespace dist2
