#pragma once

#include <cstdint>
#include <utility>

#include "specsplit/graph.hpp"

namespace specsplit {

// Deterministic 64-bit generator (splitmix64 step). Bounded draws use
// rejection so the distribution never depends on platform details.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), bound > 0
  double unit();                             // uniform in [0, 1)

 private:
  std::uint64_t state_;
};

Permutation random_permutation(int n, Rng& rng);

// rows x cols wraparound grid; 4-regular with 2*rows*cols edges. Both
// dimensions must be at least 3 so the wraparound neighbors stay distinct.
Graph torus_lattice(int rows, int cols);

// Simple k-regular graph on n vertices via the pairing model with rejection.
Graph random_regular(int n, int k, std::uint64_t seed);

// Relabeled copy plus the planted permutation mapping old to new indices.
std::pair<Graph, Permutation> scramble(const Graph& g, std::uint64_t seed);

}  // namespace specsplit
