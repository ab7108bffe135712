#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "specsplit/matrix.hpp"

namespace specsplit {

// Matrix is not strictly diagonally dominant, so the SPD guarantee is gone.
class DominanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The source matrix was perturbed after this factorization was built.
class StaleFactorizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A solve could not reach the residual contract.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cholesky factorization of a shifted matrix, pinned to the revision of the
// source it was built from.  Every solve satisfies ||A x - b|| <= tau * ||x||
// (Euclidean norms) or throws NumericError.
class Factorization {
 public:
  static constexpr double residual_tolerance = 1e-10;

  int n() const { return n_; }

  // Solve A x = e_j.
  std::vector<double> solve_basis(int j) const;

  // Solve A x = b for arbitrary b.
  std::vector<double> solve(const std::vector<double>& rhs) const;

  // Columns of A^{-1}: result[j] = solve_basis(j).
  std::vector<std::vector<double>> solve_all() const;

 private:
  friend Factorization factor(const ShiftedMatrix& src);

  Factorization() = default;
  void check_fresh() const;
  std::vector<double> solve_once(const std::vector<double>& rhs) const;

  int n_ = 0;
  std::vector<double> lower_;    // L, row-major
  std::vector<double> upper_;    // L^T, row-major; kept so both sweeps stream rows
  const ShiftedMatrix* src_ = nullptr;
  std::uint64_t revision_ = 0;
};

// The factorization keeps a reference to src for residual checks, so the
// matrix must outlive it; rvalues are rejected outright.
Factorization factor(const ShiftedMatrix& src);
Factorization factor(ShiftedMatrix&&) = delete;

}  // namespace specsplit
