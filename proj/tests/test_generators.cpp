#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "specsplit/generators.hpp"
#include "specsplit/matrix.hpp"

using namespace specsplit;

TEST_CASE("rng draws are deterministic and in range") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  Rng c(43);
  for (int i = 0; i < 1000; ++i) {
    CHECK(c.below(7) < 7);
    const double u = c.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(c.below(1) == 0);
}

TEST_CASE("random permutations are bijections and seed-stable") {
  Rng rng(44);
  for (int n : {1, 2, 5, 17, 64}) {
    const auto p = random_permutation(n, rng);
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n; ++i) hit[p(i)] = 1;
    CHECK(std::count(hit.begin(), hit.end(), 1) == n);
  }

  Rng r1(45);
  Rng r2(45);
  CHECK(random_permutation(12, r1) == random_permutation(12, r2));
}

TEST_CASE("torus lattice is 4-regular with wraparound") {
  const auto g = torus_lattice(3, 3);
  CHECK(g.n() == 9);
  CHECK(g.edge_count() == 18);
  for (int d : g.degrees()) CHECK(d == 4);

  const auto h = torus_lattice(3, 4);
  CHECK(h.n() == 12);
  CHECK(h.edge_count() == 24);
  for (int d : h.degrees()) CHECK(d == 4);

  CHECK(torus_lattice(3, 3) == torus_lattice(3, 3));

  CHECK_THROWS_AS(torus_lattice(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(torus_lattice(5, 2), std::invalid_argument);
}

TEST_CASE("random regular graphs have the requested degree") {
  const auto k4 = random_regular(4, 3, 1);
  CHECK(k4.edge_count() == 6);  // only one 3-regular graph on 4 vertices

  const auto g = random_regular(8, 3, 2);
  CHECK(g.n() == 8);
  CHECK(g.edge_count() == 12);
  for (int d : g.degrees()) CHECK(d == 3);
  CHECK(g == random_regular(8, 3, 2));

  const auto empty = random_regular(5, 0, 3);
  CHECK(empty.edge_count() == 0);

  CHECK_THROWS_AS(random_regular(5, 3, 1), std::invalid_argument);  // odd n*k
  CHECK_THROWS_AS(random_regular(4, 4, 1), std::invalid_argument);  // k >= n
  CHECK_THROWS_AS(random_regular(4, -1, 1), std::invalid_argument);
}

TEST_CASE("scramble plants a verifiable relabeling") {
  const auto g = torus_lattice(4, 4);
  const auto [h, p] = scramble(g, 7);
  CHECK(h.n() == g.n());
  CHECK(h.edge_count() == g.edge_count());
  CHECK(verify_iso(adjacency_matrix(g), adjacency_matrix(h), p));

  const auto [h2, p2] = scramble(g, 7);
  CHECK(h == h2);
  CHECK(p == p2);
}
