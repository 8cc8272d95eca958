#include "dist2/graph.hpp"

#include <algorithm>

namespace dist2 {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.m_ += (long long)nb.size();
  }
  g.m_ /= 2;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, (int)nb.size());
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve((size_t)m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<char>& keep,
                     std::vector<int>* old_ids) const {
  if ((int)keep.size() != n_)
    throw GraphError("induced: mask size does not match vertex count");
  std::vector<int> new_id(n_, -1);
  std::vector<int> olds;
  for (int v = 0; v < n_; ++v)
    if (keep[v]) {
      new_id[v] = (int)olds.size();
      olds.push_back(v);
    }
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n_; ++u) {
    if (!keep[u]) continue;
    for (int v : adj_[u])
      if (u < v && keep[v]) es.emplace_back(new_id[u], new_id[v]);
  }
  Graph h = from_edges((int)olds.size(), es);
  if (old_ids) *old_ids = std::move(olds);
  return h;
}

}  // namespace dist2
