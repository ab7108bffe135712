#include "specsplit/solver.hpp"

#include <cmath>

#include "specsplit/kernels.hpp"

namespace specsplit {

namespace {

double norm2(const std::vector<double>& v) {
  return std::sqrt(kernels::dot(v.data(), v.data(), v.size()));
}

}  // namespace

Factorization factor(const ShiftedMatrix& src) {
  const int n = src.n();
  if (n > 0 && src.dominance_margin() <= 0.0) {
    throw DominanceError("matrix is not strictly diagonally dominant");
  }

  Factorization f;
  f.n_ = n;
  f.src_ = &src;
  f.revision_ = src.revision();
  f.lower_.assign(static_cast<std::size_t>(n) * n, 0.0);
  f.upper_.assign(static_cast<std::size_t>(n) * n, 0.0);

  for (int i = 0; i < n; ++i) {
    double* li = &f.lower_[static_cast<std::size_t>(i) * n];
    for (int j = 0; j <= i; ++j) {
      const double* lj = &f.lower_[static_cast<std::size_t>(j) * n];
      const double s =
          src.entry(i, j) - kernels::dot(li, lj, static_cast<std::size_t>(j));
      if (i == j) {
        if (!(s > 0.0) || !std::isfinite(s)) {
          throw NumericError("pivot lost positive definiteness");
        }
        li[i] = std::sqrt(s);
      } else {
        li[j] = s / lj[j];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      f.upper_[static_cast<std::size_t>(j) * n + i] =
          f.lower_[static_cast<std::size_t>(i) * n + j];
    }
  }
  return f;
}

void Factorization::check_fresh() const {
  if (src_ == nullptr || src_->revision() != revision_) {
    throw StaleFactorizationError("factorization is stale; refactor first");
  }
}

std::vector<double> Factorization::solve_once(const std::vector<double>& rhs) const {
  const int n = n_;
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double* li = &lower_[static_cast<std::size_t>(i) * n];
    y[i] = (rhs[i] - kernels::dot(li, y.data(), static_cast<std::size_t>(i))) / li[i];
  }
  for (int i = n - 1; i >= 0; --i) {
    const double* ui = &upper_[static_cast<std::size_t>(i) * n];
    const std::size_t tail = static_cast<std::size_t>(n - 1 - i);
    y[i] = (y[i] - kernels::dot(ui + i + 1, y.data() + i + 1, tail)) / ui[i];
  }
  return y;
}

std::vector<double> Factorization::solve(const std::vector<double>& rhs) const {
  check_fresh();
  if (static_cast<int>(rhs.size()) != n_) {
    throw std::invalid_argument("rhs size mismatch");
  }
  const int n = n_;
  std::vector<double> x = solve_once(rhs);

  std::vector<double> r(static_cast<std::size_t>(n));
  const auto residual = [&]() {
    for (int i = 0; i < n; ++i) {
      const double offdiag =
          kernels::dot(src_->base().row(i), x.data(), static_cast<std::size_t>(n));
      r[i] = offdiag + (src_->shift(i) + src_->perturb(i)) * x[i] - rhs[i];
    }
    return norm2(r);
  };

  double bound = residual_tolerance * norm2(x);
  if (residual() <= bound) return x;

  // One round of iterative refinement is enough at this conditioning.
  const std::vector<double> d = solve_once(r);
  for (int i = 0; i < n; ++i) x[i] -= d[i];
  bound = residual_tolerance * norm2(x);
  if (residual() <= bound) return x;
  throw NumericError("solve failed the residual contract after refinement");
}

std::vector<double> Factorization::solve_basis(int j) const {
  if (j < 0 || j >= n_) throw std::invalid_argument("basis index out of range");
  std::vector<double> e(static_cast<std::size_t>(n_), 0.0);
  e[j] = 1.0;
  return solve(e);
}

std::vector<std::vector<double>> Factorization::solve_all() const {
  std::vector<std::vector<double>> cols;
  cols.reserve(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) cols.push_back(solve_basis(j));
  return cols;
}

}  // namespace specsplit
