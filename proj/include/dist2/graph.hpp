#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dist2 {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on dense vertex ids 0..n-1.  Adjacency lists are
// sorted and duplicate-free, and the structure is immutable once built, so
// every traversal in the toolkit is deterministic.
class Graph {
 public:
  Graph() = default;

  // Deduplicates edges; rejects self-loops and out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  int degree(int v) const {
    check_vertex(v);
    return (int)adj_[v].size();
  }
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  bool has_edge(int u, int v) const;

  int max_degree() const;

  // Edge list with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced on { v : keep[v] }, with vertices renumbered in id
  // order.  old_ids (if given) receives the original id of each new vertex.
  Graph induced(const std::vector<char>& keep,
                std::vector<int>* old_ids = nullptr) const;

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw GraphError("vertex id " + std::to_string(v) + " out of range");
  }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

}  // namespace dist2
