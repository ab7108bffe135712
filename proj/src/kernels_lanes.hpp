#pragma once

#include <cstddef>

// Per-lane kernel entry points. Only the dispatch unit includes this.

namespace specsplit::kernels::lanes {

double dot_scalar(const double* a, const double* b, std::size_t n);
void axpy_scalar(double* y, const double* x, double c, std::size_t n);
void sq_accumulate_scalar(double* acc, const double* row, std::size_t n);
void axpy_sq_accumulate_scalar(double* row, const double* u, double c,
                               double* colsq, std::size_t n);

#if defined(SPECSPLIT_HAVE_AVX2)
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double* y, const double* x, double c, std::size_t n);
void sq_accumulate_avx2(double* acc, const double* row, std::size_t n);
void axpy_sq_accumulate_avx2(double* row, const double* u, double c,
                             double* colsq, std::size_t n);
#endif

#if defined(SPECSPLIT_HAVE_NEON)
double dot_neon(const double* a, const double* b, std::size_t n);
void axpy_neon(double* y, const double* x, double c, std::size_t n);
void sq_accumulate_neon(double* acc, const double* row, std::size_t n);
void axpy_sq_accumulate_neon(double* row, const double* u, double c,
                             double* colsq, std::size_t n);
#endif

}  // namespace specsplit::kernels::lanes
