#include "specsplit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace specsplit {

Permutation Permutation::identity(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[i] = i;
  return Permutation(std::move(map));
}

Permutation Permutation::from_map(std::vector<int> map) {
  const int n = static_cast<int>(map.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int v = map[i];
    if (v < 0 || v >= n) {
      throw std::invalid_argument("permutation image out of range: " +
                                  std::to_string(v));
    }
    if (seen[v]) {
      throw std::invalid_argument("permutation image repeated: " +
                                  std::to_string(v));
    }
    seen[v] = 1;
  }
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Graph Graph::create(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self loop at vertex " + std::to_string(e.u));
    }
    if (!std::isfinite(e.w) || e.w == 0.0) {
      throw std::invalid_argument("edge weight must be finite and nonzero");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
      throw std::invalid_argument("duplicate edge " + std::to_string(edges[i].u) +
                                  "-" + std::to_string(edges[i].v));
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool Graph::unweighted() const {
  for (const Edge& e : edges_) {
    if (e.w != 1.0) return false;
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

Graph permute_graph(const Graph& g, const Permutation& p) {
  if (p.size() != g.n()) {
    throw std::invalid_argument("permutation size does not match graph");
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    e.u = p(e.u);
    e.v = p(e.v);
  }
  return Graph::create(g.n(), std::move(edges));
}

}  // namespace specsplit
