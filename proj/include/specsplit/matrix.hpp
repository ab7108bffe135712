#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "specsplit/graph.hpp"

namespace specsplit {

// Raised when a matrix is too degenerate for the requested operation.
struct DegenerateMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Square dense matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n, double fill = 0.0)
      : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int n() const { return n_; }
  double at(int i, int j) const { return a_[idx(i, j)]; }
  double& at(int i, int j) { return a_[idx(i, j)]; }
  const double* row(int i) const { return a_.data() + idx(i, 0); }
  double* row(int i) { return a_.data() + idx(i, 0); }
  const std::vector<double>& data() const { return a_; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  int n_ = 0;
  std::vector<double> a_;
};

// Dense symmetric matrix; symmetry is validated exactly on construction.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(DenseMatrix m);  // throws std::invalid_argument

  int n() const { return m_.n(); }
  double at(int i, int j) const { return m_.at(i, j); }
  const double* row(int i) const { return m_.row(i); }
  const DenseMatrix& full() const { return m_; }

  friend bool operator==(const DenseSymMatrix& a, const DenseSymMatrix& b) = default;

 private:
  DenseMatrix m_;
};

// Symmetric base matrix plus a diagonal shift and accumulated diagonal
// perturbations: entry(i, j) = base(i, j) + (shift[i] + perturb[i]) [i == j].
// The base is shared and immutable; add_perturbation is the only mutation
// and bumps a revision counter so factorizations can detect staleness.
class ShiftedMatrix {
 public:
  ShiftedMatrix(std::shared_ptr<const DenseSymMatrix> base,
                std::vector<double> shift);

  int n() const { return base_->n(); }
  const DenseSymMatrix& base() const { return *base_; }
  double shift(int i) const { return shift_[i]; }
  double perturb(int i) const { return perturb_[i]; }
  const std::vector<double>& shift_vector() const { return shift_; }
  const std::vector<double>& perturb_vector() const { return perturb_; }
  double diag(int i) const {
    return base_->at(i, i) + shift_[i] + perturb_[i];
  }
  double entry(int i, int j) const {
    return i == j ? diag(i) : base_->at(i, j);
  }
  std::uint64_t revision() const { return revision_; }

  // eps must be >= 0; bumps the revision even for eps == 0.
  void add_perturbation(int i, double eps);

  // min over rows of diag(i) - sum_{j != i} |base(i, j)|; > 0 means strict
  // diagonal dominance, 0 is degenerate (the zero matrix builds this way).
  double dominance_margin() const;

  // Effective dense matrix (base plus diagonal), materialized.
  DenseMatrix materialize() const;

 private:
  std::shared_ptr<const DenseSymMatrix> base_;
  std::vector<double> shift_;
  std::vector<double> perturb_;
  std::uint64_t revision_ = 0;
};

// Comparison tolerance for real-weighted matrix checks. Integer-coded
// matrices are always compared exactly.
inline constexpr double kWeightTolerance = 1e-9;

bool is_integer_coded(const DenseMatrix& m);

DenseSymMatrix adjacency_matrix(const Graph& g);

// Shift rule for unweighted graphs: shift[i] = degree(i) + 1, so every row
// has dominance margin exactly 1. Requires an unweighted graph.
ShiftedMatrix build_shifted_unweighted(const Graph& g);

// Shift rule for weighted symmetric matrices with zero diagonal:
// shift[i] = d + sum_j |m(i, j)| where d = max_i sum_j |m(i, j)|.
// Row magnitudes are summed in ascending sorted order, which makes the
// construction permutation-equivariant down to the last bit.
ShiftedMatrix build_shifted_weighted(const DenseSymMatrix& m);

// (max_i diag + offsum) / (min_i diag - offsum); throws DegenerateMatrixError
// when the denominator is not positive.
double condition_bound(const ShiftedMatrix& m);

// result[p(i)][p(j)] = m[i][j]
DenseSymMatrix apply_permutation(const DenseSymMatrix& m, const Permutation& p);

// True iff b[p(i)][p(j)] matches a[i][j] for all i, j; exact when both
// matrices are integer-coded, within kWeightTolerance otherwise.
bool verify_iso(const DenseSymMatrix& a0, const DenseSymMatrix& b0,
                const Permutation& p);

}  // namespace specsplit
