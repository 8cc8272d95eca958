#include "dist2/coloring.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace dist2 {

namespace {

// sorted vertices at distance 1 or 2 from u
std::vector<int> two_ball(const Graph& g, int u) {
  std::vector<int> ball = g.neighbors(u);
  for (int w : g.neighbors(u))
    for (int x : g.neighbors(w))
      if (x != u) ball.push_back(x);
  std::sort(ball.begin(), ball.end());
  ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
  return ball;
}

}  // namespace

std::vector<ColorViolation> verify_coloring(const Graph& g, const Coloring& c) {
  const int n = g.vertex_count();
  if ((int)c.colors.size() != n)
    throw GraphError("verify_coloring: assignment covers " +
                     std::to_string(c.colors.size()) + " vertices, graph has " +
                     std::to_string(n));
  for (int v = 0; v < n; ++v) {
    if (c.colors[v] < 0)
      throw GraphError("verify_coloring: vertex " + std::to_string(v) +
                       " is uncolored");
    if (c.colors[v] >= c.k)
      throw GraphError("verify_coloring: vertex " + std::to_string(v) +
                       " uses color " + std::to_string(c.colors[v]) +
                       " outside palette of size " + std::to_string(c.k));
  }
  std::vector<ColorViolation> bad;
  for (int u = 0; u < n; ++u)
    for (int v : two_ball(g, u))
      if (v > u && c.colors[u] == c.colors[v])
        bad.push_back(ColorViolation{u, v, c.colors[u]});
  return bad;
}

std::optional<Coloring> greedy_color(const Graph& g, int k,
                                     const std::vector<int>& order) {
  const int n = g.vertex_count();
  if ((int)order.size() != n)
    throw GraphError("greedy_color: order has " + std::to_string(order.size()) +
                     " entries, graph has " + std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int v : order) {
    g.check_vertex(v);
    if (seen[v]) throw GraphError("greedy_color: order repeats vertex " +
                                  std::to_string(v));
    seen[v] = 1;
  }
  if (k < 0) throw GraphError("greedy_color: negative palette size");

  Coloring c;
  c.k = k;
  c.colors.assign(n, -1);
  std::vector<char> used;
  for (int v : order) {
    used.assign(k, 0);
    for (int w : two_ball(g, v))
      if (c.colors[w] >= 0) used[c.colors[w]] = 1;
    int pick = -1;
    for (int col = 0; col < k; ++col)
      if (!used[col]) {
        pick = col;
        break;
      }
    if (pick < 0) return std::nullopt;
    c.colors[v] = pick;
  }
  return c;
}

namespace {

struct SquareAdj {
  int n = 0;
  std::vector<std::vector<int>> nbr;  // sorted two-balls
  std::vector<int> deg;
};

SquareAdj square_adjacency(const Graph& g) {
  SquareAdj s;
  s.n = g.vertex_count();
  s.nbr.resize(s.n);
  s.deg.resize(s.n);
  for (int v = 0; v < s.n; ++v) {
    s.nbr[v] = two_ball(g, v);
    s.deg[v] = (int)s.nbr[v].size();
  }
  return s;
}

bool square_adjacent(const SquareAdj& s, int u, int v) {
  return std::binary_search(s.nbr[u].begin(), s.nbr[u].end(), v);
}

struct Solver {
  const SquareAdj& s;
  long long budget;
  long long nodes = 0;
  bool aborted = false;
  int ub;                           // best palette size found
  std::vector<int> best;            // assignment realizing ub
  int lb;
  std::vector<int> colors;          // working assignment
  std::vector<std::vector<int>> cnt;  // cnt[v][c]: square-neighbors of v with color c
  std::vector<int> sat;             // distinct colors around v

  Solver(const SquareAdj& sq, long long b, int lower, int upper,
         std::vector<int> seed)
      : s(sq), budget(b), ub(upper), best(std::move(seed)), lb(lower) {
    colors.assign(s.n, -1);
    cnt.assign(s.n, std::vector<int>(s.n + 1, 0));
    sat.assign(s.n, 0);
  }

  void assign(int v, int c) {
    colors[v] = c;
    for (int w : s.nbr[v])
      if (++cnt[w][c] == 1) ++sat[w];
  }

  void unassign(int v, int c) {
    colors[v] = -1;
    for (int w : s.nbr[v])
      if (--cnt[w][c] == 0) --sat[w];
  }

  int pick_vertex() const {
    int bestv = -1;
    for (int v = 0; v < s.n; ++v) {
      if (colors[v] >= 0) continue;
      if (bestv < 0 || sat[v] > sat[bestv] ||
          (sat[v] == sat[bestv] && s.deg[v] > s.deg[bestv]))
        bestv = v;
    }
    return bestv;
  }

  void dfs(int colored, int used) {
    if (aborted || ub == lb) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (used >= ub) return;
    if (colored == s.n) {
      ub = used;
      best = colors;
      return;
    }
    int v = pick_vertex();
    int top = std::min(used, ub - 2);  // c == used opens a new color
    for (int c = 0; c <= top; ++c) {
      if (cnt[v][c] > 0) continue;
      assign(v, c);
      dfs(colored + 1, std::max(used, c + 1));
      unassign(v, c);
      if (aborted || ub == lb) return;
    }
  }
};

}  // namespace

std::vector<int> greedy_square_clique(const Graph& g) {
  SquareAdj s = square_adjacency(g);
  std::vector<int> order(s.n);
  for (int v = 0; v < s.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (s.deg[a] != s.deg[b]) return s.deg[a] > s.deg[b];
    return a < b;
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!square_adjacent(s, u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

ExactResult exact_chi2(const Graph& g, long long node_budget) {
  const int n = g.vertex_count();
  ExactResult res;
  if (n == 0) {
    res.exact = true;
    return res;
  }

  SquareAdj s = square_adjacency(g);
  std::vector<int> clique = greedy_square_clique(g);
  res.lower_bound = (int)clique.size();

  // saturation-ordered greedy for the initial upper bound
  {
    std::vector<int> colors(n, -1), sat(n, 0);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n + 1, 0));
    for (int step = 0; step < n; ++step) {
      int v = -1;
      for (int u = 0; u < n; ++u) {
        if (colors[u] >= 0) continue;
        if (v < 0 || sat[u] > sat[v] || (sat[u] == sat[v] && s.deg[u] > s.deg[v]))
          v = u;
      }
      int c = 0;
      while (seen[v][c]) ++c;
      colors[v] = c;
      for (int w : s.nbr[v])
        if (!seen[w][c]) {
          seen[w][c] = 1;
          ++sat[w];
        }
    }
    res.upper_bound = *std::max_element(colors.begin(), colors.end()) + 1;
    res.best.k = res.upper_bound;
    res.best.colors = colors;
  }

  if (res.upper_bound == res.lower_bound) {
    res.exact = true;
    return res;
  }

  Solver solver(s, node_budget, res.lower_bound, res.upper_bound,
                res.best.colors);
  // fixing the clique's colors breaks color symmetry without losing solutions
  for (int i = 0; i < (int)clique.size(); ++i) solver.assign(clique[i], i);
  solver.dfs((int)clique.size(), (int)clique.size());

  res.nodes = solver.nodes;
  res.upper_bound = solver.ub;
  res.best.k = solver.ub;
  res.best.colors = solver.best;
  res.exact = !solver.aborted;
  if (res.exact) res.lower_bound = res.upper_bound;
  return res;
}

std::vector<int> color_even_cycle_lists(const ListInstance& inst) {
  const int len = (int)inst.cycle.size();
  if (len < 4 || len % 2 != 0)
    throw std::invalid_argument(
        "color_even_cycle_lists: cycle length must be even and >= 4, got " +
        std::to_string(len));
  if ((int)inst.lists.size() != len)
    throw std::invalid_argument(
        "color_even_cycle_lists: need one list per position");

  // two smallest distinct colors per position
  std::vector<std::array<int, 2>> l2(len);
  for (int i = 0; i < len; ++i) {
    std::vector<int> t = inst.lists[i];
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if ((int)t.size() < 2)
      throw std::invalid_argument(
          "color_even_cycle_lists: position " + std::to_string(i) +
          " has fewer than 2 distinct colors");
    l2[i] = {t[0], t[1]};
  }

  std::vector<int> out(len, -1);
  auto differs = [&](int i, int j) { return l2[i] != l2[j]; };

  int start = -1;
  for (int i = 0; i < len && start < 0; ++i)
    if (differs(i, (i + 1) % len)) start = i;

  if (start < 0) {
    // identical lists everywhere: alternate the two colors
    for (int i = 0; i < len; ++i) out[i] = l2[0][i % 2];
    return out;
  }

  // some color at start is missing from the next list; placing it there
  // leaves the final position (start+1) with at most one forbidden color
  int next = (start + 1) % len;
  int c = -1;
  for (int cand : l2[start])
    if (cand != l2[next][0] && cand != l2[next][1]) {
      c = cand;
      break;
    }
  if (c < 0)
    throw std::logic_error("color_even_cycle_lists: list trim broke invariant");
  out[start] = c;
  for (int step = 1; step < len; ++step) {
    int i = (start - step % len + len) % len;
    int prev = (i + 1) % len;  // already colored
    int pick = l2[i][0] == out[prev] ? l2[i][1] : l2[i][0];
    if (step == len - 1 && pick == out[(i + len - 1) % len])
      throw std::logic_error(
          "color_even_cycle_lists: closing position has no free color");
    out[i] = pick;
  }
  return out;
}

}  // namespace dist2
