#include "kernels_lanes.hpp"

#if defined(SPECSPLIT_HAVE_AVX2)

#include <immintrin.h>

// AVX2/FMA variants. This file is the only one compiled with -mavx2 -mfma;
// the dispatcher never calls in here unless the CPU reports both features.

namespace specsplit::kernels::lanes {

static inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  const std::size_t quot = n / 8;
  const std::size_t rem = n % 8;
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  for (std::size_t i = 0; i < quot; ++i) {
    s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a), _mm256_loadu_pd(b), s0);
    s1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + 4), _mm256_loadu_pd(b + 4), s1);
    a += 8;
    b += 8;
  }
  double total = hsum(_mm256_add_pd(s0, s1));
  for (std::size_t i = 0; i < rem; ++i) total += a[i] * b[i];
  return total;
}

void axpy_avx2(double* y, const double* x, double c, std::size_t n) {
  const std::size_t quot = n / 4;
  const std::size_t rem = n % 4;
  const __m256d vc = _mm256_set1_pd(c);
  for (std::size_t i = 0; i < quot; ++i) {
    const __m256d vy = _mm256_fmadd_pd(vc, _mm256_loadu_pd(x), _mm256_loadu_pd(y));
    _mm256_storeu_pd(y, vy);
    x += 4;
    y += 4;
  }
  for (std::size_t i = 0; i < rem; ++i) y[i] += c * x[i];
}

void sq_accumulate_avx2(double* acc, const double* row, std::size_t n) {
  const std::size_t quot = n / 4;
  const std::size_t rem = n % 4;
  for (std::size_t i = 0; i < quot; ++i) {
    const __m256d r = _mm256_loadu_pd(row);
    _mm256_storeu_pd(acc, _mm256_fmadd_pd(r, r, _mm256_loadu_pd(acc)));
    row += 4;
    acc += 4;
  }
  for (std::size_t i = 0; i < rem; ++i) acc[i] += row[i] * row[i];
}

void axpy_sq_accumulate_avx2(double* row, const double* u, double c,
                             double* colsq, std::size_t n) {
  const std::size_t quot = n / 4;
  const std::size_t rem = n % 4;
  const __m256d vc = _mm256_set1_pd(c);
  for (std::size_t i = 0; i < quot; ++i) {
    const __m256d v = _mm256_fmadd_pd(vc, _mm256_loadu_pd(u), _mm256_loadu_pd(row));
    _mm256_storeu_pd(row, v);
    _mm256_storeu_pd(colsq, _mm256_fmadd_pd(v, v, _mm256_loadu_pd(colsq)));
    row += 4;
    u += 4;
    colsq += 4;
  }
  for (std::size_t i = 0; i < rem; ++i) {
    const double v = row[i] + c * u[i];
    row[i] = v;
    colsq[i] += v * v;
  }
}

}  // namespace specsplit::kernels::lanes

#endif  // SPECSPLIT_HAVE_AVX2
