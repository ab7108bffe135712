#include "specsplit/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

namespace specsplit {

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = next();
  while (r >= limit) r = next();
  return r % bound;
}

double Rng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(map[i], map[j]);
  }
  return Permutation::from_map(std::move(map));
}

Graph torus_lattice(int rows, int cols) {
  if (rows < 3 || cols < 3) {
    throw std::invalid_argument("torus dimensions must be at least 3");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2) * rows * cols);
  const auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      edges.push_back({id(r, c), id(r, (c + 1) % cols), 1.0});
      edges.push_back({id(r, c), id((r + 1) % rows, c), 1.0});
    }
  }
  return Graph::create(rows * cols, std::move(edges));
}

Graph random_regular(int n, int k, std::uint64_t seed) {
  if (n <= 0 || k < 0 || k >= n) {
    throw std::invalid_argument("need 0 <= k < n and n > 0");
  }
  if ((static_cast<long long>(n) * k) % 2 != 0) {
    throw std::invalid_argument("n * k must be even");
  }
  if (k == 0) return Graph::create(n, {});

  Rng rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(n) * k);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < k; ++c) stubs[static_cast<std::size_t>(v) * k + c] = v;
  }

  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i];
      int v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Edge> edges;
    edges.reserve(seen.size());
    for (const auto& [u, v] : seen) edges.push_back({u, v, 1.0});
    return Graph::create(n, std::move(edges));
  }
  throw std::runtime_error("pairing model failed to produce a simple graph");
}

std::pair<Graph, Permutation> scramble(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  Permutation p = random_permutation(g.n(), rng);
  return {permute_graph(g, p), std::move(p)};
}

}  // namespace specsplit
