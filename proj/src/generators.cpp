#include "dist2/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dist2/analysis.hpp"

namespace dist2 {

namespace {

// Unbiased uniform integer in [0, bound), portable across platforms because
// mt19937_64's output sequence is pinned by the standard (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t r;
    do {
      r = eng_();
    } while (r < min);
    return r % bound;
  }

 private:
  std::mt19937_64 eng_;
};

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph::from_edges(n, edges);
}

void check_degrees(const Graph& g, const std::vector<int>& expected, const char* what) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != expected[static_cast<size_t>(v)]) {
      throw GraphError(std::string(what) + ": construction self-check failed, vertex " +
                       std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                       ", expected " + std::to_string(expected[static_cast<size_t>(v)]));
    }
  }
}

// Shared core of the two extremal constructions: hub vertices x=0, y=1, z=2
// and three groups of 2-vertices, each joined to two hubs.
//   group A (size delta/2 - 1) -> x and y
//   group B (size delta/2)     -> x and z
//   group C (size delta/2)     -> y and z
// With the direct x-y edge every hub has degree delta and only z can reuse a
// color (that of an A vertex) in the square; without it x and y drop to
// degree delta-1 and each of x, y, z gains exactly one reuse partner.
Graph wegner_core(int delta, bool with_xy_edge, const char* what) {
  if (delta < 8 || delta % 2 != 0) {
    throw std::invalid_argument(std::string(what) +
                                ": delta must be an even integer >= 8, got " +
                                std::to_string(delta));
  }
  const int half = delta / 2;
  const int x = 0, y = 1, z = 2;
  const int a0 = 3;
  const int b0 = a0 + (half - 1);
  const int c0 = b0 + half;
  const int n = c0 + half;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < half - 1; ++i) {
    edges.emplace_back(x, a0 + i);
    edges.emplace_back(y, a0 + i);
  }
  for (int i = 0; i < half; ++i) {
    edges.emplace_back(x, b0 + i);
    edges.emplace_back(z, b0 + i);
  }
  for (int i = 0; i < half; ++i) {
    edges.emplace_back(y, c0 + i);
    edges.emplace_back(z, c0 + i);
  }
  if (with_xy_edge) edges.emplace_back(x, y);

  Graph g = from_pairs(n, edges);
  std::vector<int> expected(static_cast<size_t>(n), 2);
  const int hub_xy = with_xy_edge ? delta : delta - 1;
  expected[x] = hub_xy;
  expected[y] = hub_xy;
  expected[z] = delta;
  check_degrees(g, expected, what);
  return g;
}

}  // namespace

Graph moore_2_2() {
  return from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

Graph moore_3_2() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  Graph g = from_pairs(10, edges);
  check_degrees(g, std::vector<int>(10, 3), "moore_3_2");
  return g;
}

Graph moore_7_2() {
  // Robertson's pentagon/pentagram model: pentagons P_h (h = 0..4) with
  // vertices 5h+j, pentagrams Q_i (i = 0..4) with vertices 25+5i+j, and
  // P_{h,j} adjacent to Q_{i,(h*i+j) mod 5}.
  std::vector<std::pair<int, int>> edges;
  auto P = [](int h, int j) { return 5 * h + j; };
  auto Q = [](int i, int j) { return 25 + 5 * i + j; };
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) edges.emplace_back(P(h, j), P(h, (j + 1) % 5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) edges.emplace_back(Q(i, j), Q(i, (j + 2) % 5));
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) edges.emplace_back(P(h, j), Q(i, (h * i + j) % 5));
  Graph g = from_pairs(50, edges);
  check_degrees(g, std::vector<int>(50, 7), "moore_7_2");
  return g;
}

Graph wegner_girth3(int delta) { return wegner_core(delta, true, "wegner_girth3"); }

Graph wegner_girth4(int delta) { return wegner_core(delta, false, "wegner_girth4"); }

Graph random_sparse(int n, const Rational& mad_cap, int delta_target,
                    unsigned long long seed) {
  if (n < 2) throw std::invalid_argument("random_sparse: need n >= 2");
  if (delta_target < 1 || delta_target >= n) {
    throw std::invalid_argument("random_sparse: delta_target must be in [1, n-1]");
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(static_cast<size_t>(n), 0);
  auto add = [&](int u, int v) {
    edges.emplace_back(u, v);
    ++deg[static_cast<size_t>(u)];
    ++deg[static_cast<size_t>(v)];
  };

  Rng rng(seed);

  // Hub first so the maximum degree is hit exactly, then grow a random tree
  // with all degrees capped at delta_target.
  for (int v = 1; v <= delta_target; ++v) add(0, v);
  for (int v = delta_target + 1; v < n; ++v) {
    std::vector<int> candidates;
    for (int u = 0; u < v; ++u)
      if (deg[static_cast<size_t>(u)] < delta_target) candidates.push_back(u);
    // A tree on v vertices has degree sum 2(v-1) < v*delta_target, so some
    // vertex is always below the cap.
    add(candidates[rng.below(candidates.size())], v);
  }

  Graph g = from_pairs(n, edges);
  {
    Rational base_mad = mad_exact(g);
    if (!(base_mad < mad_cap)) {
      throw GraphError(
          "random_sparse: even the spanning tree has mad " + base_mad.str() +
          " >= cap " + mad_cap.str() +
          "; try looser parameters (larger mad_cap or smaller delta_target)");
    }
  }

  // Bounded augmentation: random extra edges, each kept only if the exact mad
  // stays below the cap and no degree exceeds delta_target.
  const int max_accepts = 2 * n;
  const int max_tries = 8 * n;
  int accepts = 0;
  for (int t = 0; t < max_tries && accepts < max_accepts; ++t) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v || g.has_edge(u, v)) continue;
    if (deg[static_cast<size_t>(u)] >= delta_target ||
        deg[static_cast<size_t>(v)] >= delta_target)
      continue;
    auto trial_edges = edges;
    trial_edges.emplace_back(u, v);
    Graph trial = from_pairs(n, trial_edges);
    if (mad_exact(trial) < mad_cap) {
      add(u, v);
      g = std::move(trial);
      ++accepts;
    }
  }
  return g;
}

GeneratorKind generator_kind_by_name(const std::string& name) {
  if (name == "moore_2_2") return GeneratorKind::moore_2_2;
  if (name == "moore_3_2") return GeneratorKind::moore_3_2;
  if (name == "moore_7_2") return GeneratorKind::moore_7_2;
  if (name == "wegner_girth3") return GeneratorKind::wegner_girth3;
  if (name == "wegner_girth4") return GeneratorKind::wegner_girth4;
  if (name == "random_sparse") return GeneratorKind::random_sparse;
  throw std::invalid_argument("unknown generator kind: " + name);
}

const char* generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::moore_2_2: return "moore_2_2";
    case GeneratorKind::moore_3_2: return "moore_3_2";
    case GeneratorKind::moore_7_2: return "moore_7_2";
    case GeneratorKind::wegner_girth3: return "wegner_girth3";
    case GeneratorKind::wegner_girth4: return "wegner_girth4";
    case GeneratorKind::random_sparse: return "random_sparse";
  }
  throw std::invalid_argument("unknown generator kind");
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::moore_2_2: return moore_2_2();
    case GeneratorKind::moore_3_2: return moore_3_2();
    case GeneratorKind::moore_7_2: return moore_7_2();
    case GeneratorKind::wegner_girth3: return wegner_girth3(spec.delta);
    case GeneratorKind::wegner_girth4: return wegner_girth4(spec.delta);
    case GeneratorKind::random_sparse:
      return random_sparse(spec.n, spec.mad_cap, spec.delta_target, spec.seed);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace dist2
