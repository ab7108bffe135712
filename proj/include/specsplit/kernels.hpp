#pragma once

#include <cstddef>

// Dense vector kernels underneath the solver and the matching engine.
// Each kernel has a scalar reference implementation plus SIMD variants
// compiled into separate translation units; the best variant is selected
// once at startup.  set_lane() pins a specific variant, which the
// equivalence tests use to compare lanes against each other.

namespace specsplit::kernels {

enum class Lane { Scalar, Avx2, Neon };

Lane best_available_lane();
Lane active_lane();
// Throws std::invalid_argument if the lane is not usable on this machine.
void set_lane(Lane lane);
bool lane_available(Lane lane);
const char* lane_name(Lane lane);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// y[i] += c * x[i]
void axpy(double* y, const double* x, double c, std::size_t n);

// acc[i] += row[i] * row[i]
void sq_accumulate(double* acc, const double* row, std::size_t n);

// row[i] += c * u[i], then colsq[i] += row[i] * row[i] on the updated value.
// One pass over a matrix row updates it and folds it into per-column
// squared-norm accumulators at the same time.
void axpy_sq_accumulate(double* row, const double* u, double c, double* colsq,
                        std::size_t n);

}  // namespace specsplit::kernels
