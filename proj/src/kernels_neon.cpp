#include "kernels_lanes.hpp"

#if defined(SPECSPLIT_HAVE_NEON)

#include <arm_neon.h>

// NEON variants for aarch64. Baseline on that architecture, so no feature
// probing is needed beyond the compile-time guard.

namespace specsplit::kernels::lanes {

double dot_neon(const double* a, const double* b, std::size_t n) {
  const std::size_t quot = n / 4;
  const std::size_t rem = n % 4;
  float64x2_t s0 = vdupq_n_f64(0.0);
  float64x2_t s1 = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < quot; ++i) {
    s0 = vfmaq_f64(s0, vld1q_f64(a), vld1q_f64(b));
    s1 = vfmaq_f64(s1, vld1q_f64(a + 2), vld1q_f64(b + 2));
    a += 4;
    b += 4;
  }
  double total = vaddvq_f64(s0) + vaddvq_f64(s1);
  for (std::size_t i = 0; i < rem; ++i) total += a[i] * b[i];
  return total;
}

void axpy_neon(double* y, const double* x, double c, std::size_t n) {
  const std::size_t quot = n / 2;
  const std::size_t rem = n % 2;
  const float64x2_t vc = vdupq_n_f64(c);
  for (std::size_t i = 0; i < quot; ++i) {
    vst1q_f64(y, vfmaq_f64(vld1q_f64(y), vc, vld1q_f64(x)));
    x += 2;
    y += 2;
  }
  for (std::size_t i = 0; i < rem; ++i) y[i] += c * x[i];
}

void sq_accumulate_neon(double* acc, const double* row, std::size_t n) {
  const std::size_t quot = n / 2;
  const std::size_t rem = n % 2;
  for (std::size_t i = 0; i < quot; ++i) {
    const float64x2_t r = vld1q_f64(row);
    vst1q_f64(acc, vfmaq_f64(vld1q_f64(acc), r, r));
    row += 2;
    acc += 2;
  }
  for (std::size_t i = 0; i < rem; ++i) acc[i] += row[i] * row[i];
}

void axpy_sq_accumulate_neon(double* row, const double* u, double c,
                             double* colsq, std::size_t n) {
  const std::size_t quot = n / 2;
  const std::size_t rem = n % 2;
  const float64x2_t vc = vdupq_n_f64(c);
  for (std::size_t i = 0; i < quot; ++i) {
    const float64x2_t v = vfmaq_f64(vld1q_f64(row), vc, vld1q_f64(u));
    vst1q_f64(row, v);
    vst1q_f64(colsq, vfmaq_f64(vld1q_f64(colsq), v, v));
    row += 2;
    u += 2;
    colsq += 2;
  }
  for (std::size_t i = 0; i < rem; ++i) {
    const double v = row[i] + c * u[i];
    row[i] = v;
    colsq[i] += v * v;
  }
}

}  // namespace specsplit::kernels::lanes

#endif  // SPECSPLIT_HAVE_NEON
