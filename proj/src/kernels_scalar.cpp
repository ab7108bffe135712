#include "kernels_lanes.hpp"

// Reference kernels. These define the semantics the SIMD variants are tested
// against; keep them free of manual unrolling so they stay obviously correct.

namespace specsplit::kernels::lanes {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double* y, const double* x, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += c * x[i];
}

void sq_accumulate_scalar(double* acc, const double* row, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += row[i] * row[i];
}

void axpy_sq_accumulate_scalar(double* row, const double* u, double c,
                               double* colsq, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = row[i] + c * u[i];
    row[i] = v;
    colsq[i] += v * v;
  }
}

}  // namespace specsplit::kernels::lanes
