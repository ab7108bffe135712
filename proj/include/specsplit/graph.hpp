#pragma once

#include <vector>

namespace specsplit {

// Vertex relabeling stored as the image map i -> map[i].
class Permutation {
 public:
  static Permutation identity(int n);
  // Validates that the map is a bijection on [0, n); throws otherwise.
  static Permutation from_map(std::vector<int> map);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  explicit Permutation(std::vector<int> map) : map_(std::move(map)) {}
  std::vector<int> map_;
};

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Undirected simple graph, optionally edge-weighted. No self loops, no
// duplicate edges. Edges are canonicalized to u < v and sorted.
class Graph {
 public:
  // Validates indices, rejects self loops, duplicates (in either
  // orientation), zero and non-finite weights.
  static Graph create(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<int> degrees() const;
  bool unweighted() const;  // every weight exactly 1.0

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Relabels vertices: edge (u, v) becomes (p(u), p(v)).
Graph permute_graph(const Graph& g, const Permutation& p);

}  // namespace specsplit
