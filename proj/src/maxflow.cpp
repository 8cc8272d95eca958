#include "dist2/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace dist2 {

void MaxFlow::add_edge(int u, int v, long long cap) {
  arcs_.push_back({v, head_[u], cap});
  head_[u] = (int)arcs_.size() - 1;
  arcs_.push_back({u, head_[v], 0});
  head_[v] = (int)arcs_.size() - 1;
}

bool MaxFlow::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e = head_[v]; e != -1; e = arcs_[e].next) {
      if (arcs_[e].cap > 0 && level_[arcs_[e].to] == -1) {
        level_[arcs_[e].to] = level_[v] + 1;
        q.push(arcs_[e].to);
      }
    }
  }
  return level_[t] != -1;
}

long long MaxFlow::dfs(int v, int t, long long pushed) {
  if (v == t || pushed == 0) return pushed;
  for (int& e = it_[v]; e != -1; e = arcs_[e].next) {
    int to = arcs_[e].to;
    if (arcs_[e].cap <= 0 || level_[to] != level_[v] + 1) continue;
    long long got = dfs(to, t, std::min(pushed, arcs_[e].cap));
    if (got > 0) {
      arcs_[e].cap -= got;
      arcs_[e ^ 1].cap += got;
      return got;
    }
  }
  level_[v] = -1;  // dead end; prune for the rest of this phase
  return 0;
}

long long MaxFlow::run(int s, int t) {
  long long flow = 0;
  while (bfs(s, t)) {
    for (size_t i = 0; i < it_.size(); ++i) it_[i] = head_[i];
    while (long long got = dfs(s, t, INT64_MAX)) flow += got;
  }
  return flow;
}

}  // namespace dist2
