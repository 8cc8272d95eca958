#pragma once

#include <vector>

namespace dist2 {

// Dinic max-flow on 64-bit capacities.  Small and allocation-friendly: the
// density decision inside mad_exact rebuilds one of these per probe.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int u, int v, long long cap);
  long long run(int s, int t);

 private:
  struct Arc {
    int to;
    int next;
    long long cap;
  };
  std::vector<Arc> arcs_;
  std::vector<int> head_, level_, it_;

  bool bfs(int s, int t);
  long long dfs(int v, int t, long long pushed);
};

}  // namespace dist2
