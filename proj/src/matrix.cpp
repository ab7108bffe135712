#include "specsplit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace specsplit {

namespace {

// Magnitudes summed in ascending order so the result depends only on the
// multiset of values, not on their layout in the row.
double sorted_abs_sum(const double* row, int n, int skip) {
  std::vector<double> mags;
  mags.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == skip) continue;
    const double a = std::fabs(row[j]);
    if (a != 0.0) mags.push_back(a);
  }
  std::sort(mags.begin(), mags.end());
  double s = 0.0;
  for (double a : mags) s += a;
  return s;
}

bool close_or_equal(double x, double y, bool exact) {
  if (exact) return x == y;
  const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= kWeightTolerance * scale;
}

}  // namespace

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  DenseMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("matrix rows must all have length n");
    }
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

DenseSymMatrix::DenseSymMatrix(DenseMatrix m) : m_(std::move(m)) {
  for (int i = 0; i < m_.n(); ++i) {
    for (int j = i + 1; j < m_.n(); ++j) {
      if (m_.at(i, j) != m_.at(j, i)) {
        throw std::invalid_argument("matrix is not symmetric at (" +
                                    std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
    }
  }
}

ShiftedMatrix::ShiftedMatrix(std::shared_ptr<const DenseSymMatrix> base,
                             std::vector<double> shift)
    : base_(std::move(base)),
      shift_(std::move(shift)),
      perturb_(shift_.size(), 0.0) {
  if (!base_) throw std::invalid_argument("null base matrix");
  if (static_cast<int>(shift_.size()) != base_->n()) {
    throw std::invalid_argument("shift vector size does not match base");
  }
}

void ShiftedMatrix::add_perturbation(int i, double eps) {
  if (i < 0 || i >= n()) throw std::invalid_argument("perturbation index out of range");
  if (!(eps >= 0.0)) throw std::invalid_argument("perturbation must be nonnegative");
  perturb_[i] += eps;
  ++revision_;
}

double ShiftedMatrix::dominance_margin() const {
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n(); ++i) {
    const double off = sorted_abs_sum(base_->row(i), n(), i);
    margin = std::min(margin, diag(i) - off);
  }
  return n() == 0 ? 0.0 : margin;
}

DenseMatrix ShiftedMatrix::materialize() const {
  DenseMatrix m = base_->full();
  for (int i = 0; i < n(); ++i) m.at(i, i) = diag(i);
  return m;
}

bool is_integer_coded(const DenseMatrix& m) {
  for (double v : m.data()) {
    if (!std::isfinite(v) || v != std::nearbyint(v)) return false;
  }
  return true;
}

DenseSymMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix m(g.n());
  for (const Edge& e : g.edges()) {
    m.at(e.u, e.v) = e.w;
    m.at(e.v, e.u) = e.w;
  }
  return DenseSymMatrix(std::move(m));
}

ShiftedMatrix build_shifted_unweighted(const Graph& g) {
  if (!g.unweighted()) {
    throw std::invalid_argument(
        "unweighted shift rule applied to a weighted graph");
  }
  auto base = std::make_shared<const DenseSymMatrix>(adjacency_matrix(g));
  const std::vector<int> deg = g.degrees();
  std::vector<double> shift(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) shift[i] = static_cast<double>(deg[i]) + 1.0;
  return ShiftedMatrix(std::move(base), std::move(shift));
}

ShiftedMatrix build_shifted_weighted(const DenseSymMatrix& m) {
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) != 0.0) {
      throw std::invalid_argument("weighted shift rule requires zero diagonal");
    }
  }
  std::vector<double> rowsum(static_cast<std::size_t>(n));
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    rowsum[i] = sorted_abs_sum(m.row(i), n, i);
    d = std::max(d, rowsum[i]);
  }
  std::vector<double> shift(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) shift[i] = d + rowsum[i];
  auto base = std::make_shared<const DenseSymMatrix>(m);
  return ShiftedMatrix(std::move(base), std::move(shift));
}

double condition_bound(const ShiftedMatrix& m) {
  const int n = m.n();
  if (n == 0) throw DegenerateMatrixError("empty matrix has no condition bound");
  double eta = -std::numeric_limits<double>::infinity();
  double chi = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double off = sorted_abs_sum(m.base().row(i), n, i);
    eta = std::max(eta, m.diag(i) + off);
    chi = std::min(chi, m.diag(i) - off);
  }
  if (!(chi > 0.0)) {
    throw DegenerateMatrixError("diagonal dominance margin is not positive");
  }
  return eta / chi;
}

DenseSymMatrix apply_permutation(const DenseSymMatrix& m, const Permutation& p) {
  if (p.size() != m.n()) {
    throw std::invalid_argument("permutation size does not match matrix");
  }
  DenseMatrix out(m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      out.at(p(i), p(j)) = m.at(i, j);
    }
  }
  return DenseSymMatrix(std::move(out));
}

bool verify_iso(const DenseSymMatrix& a0, const DenseSymMatrix& b0,
                const Permutation& p) {
  if (a0.n() != b0.n() || p.size() != a0.n()) {
    throw std::invalid_argument("verify_iso size mismatch");
  }
  const bool exact = is_integer_coded(a0.full()) && is_integer_coded(b0.full());
  for (int i = 0; i < a0.n(); ++i) {
    for (int j = 0; j < a0.n(); ++j) {
      if (!close_or_equal(b0.at(p(i), p(j)), a0.at(i, j), exact)) return false;
    }
  }
  return true;
}

}  // namespace specsplit
