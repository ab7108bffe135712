#include "specsplit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specsplit {

std::optional<Permutation> brute_force_iso(const DenseSymMatrix& a0,
                                           const DenseSymMatrix& b0) {
  if (a0.n() != b0.n()) return std::nullopt;
  const int n = a0.n();
  if (n > 10) throw std::invalid_argument("brute_force_iso is capped at n = 10");
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  do {
    const Permutation p = Permutation::from_map(map);
    if (verify_iso(a0, b0, p)) return p;
  } while (std::next_permutation(map.begin(), map.end()));
  return std::nullopt;
}

std::optional<FrobeniusSolution> brute_force_frobenius(const DenseMatrix& fa,
                                                       const DenseMatrix& fb) {
  if (fa.n() != fb.n()) return std::nullopt;
  const int n = fa.n();
  if (n > 6) throw std::invalid_argument("brute_force_frobenius is capped at n = 6");
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 0);
  do {
    const Permutation rp = Permutation::from_map(rows);
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    do {
      const FrobeniusSolution s{rp, Permutation::from_map(cols)};
      if (verify_frobenius(fa, fb, s)) return s;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return std::nullopt;
}

}  // namespace specsplit
