#include "specsplit/kernels.hpp"

#include <stdexcept>

#include "kernels_lanes.hpp"

namespace specsplit::kernels {

namespace {

struct Table {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double*, const double*, double, std::size_t);
  void (*sq_accumulate)(double*, const double*, std::size_t);
  void (*axpy_sq_accumulate)(double*, const double*, double, double*, std::size_t);
};

constexpr Table kScalarTable = {
    lanes::dot_scalar,
    lanes::axpy_scalar,
    lanes::sq_accumulate_scalar,
    lanes::axpy_sq_accumulate_scalar,
};

#if defined(SPECSPLIT_HAVE_AVX2)
constexpr Table kAvx2Table = {
    lanes::dot_avx2,
    lanes::axpy_avx2,
    lanes::sq_accumulate_avx2,
    lanes::axpy_sq_accumulate_avx2,
};
#endif

#if defined(SPECSPLIT_HAVE_NEON)
constexpr Table kNeonTable = {
    lanes::dot_neon,
    lanes::axpy_neon,
    lanes::sq_accumulate_neon,
    lanes::axpy_sq_accumulate_neon,
};
#endif

const Table& table_for(Lane lane) {
  switch (lane) {
#if defined(SPECSPLIT_HAVE_AVX2)
    case Lane::Avx2:
      return kAvx2Table;
#endif
#if defined(SPECSPLIT_HAVE_NEON)
    case Lane::Neon:
      return kNeonTable;
#endif
    default:
      return kScalarTable;
  }
}

Lane g_lane = best_available_lane();
const Table* g_table = &table_for(g_lane);

}  // namespace

bool lane_available(Lane lane) {
  switch (lane) {
    case Lane::Scalar:
      return true;
    case Lane::Avx2:
#if defined(SPECSPLIT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Lane::Neon:
#if defined(SPECSPLIT_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Lane best_available_lane() {
#if defined(SPECSPLIT_HAVE_AVX2)
  if (lane_available(Lane::Avx2)) return Lane::Avx2;
#endif
#if defined(SPECSPLIT_HAVE_NEON)
  return Lane::Neon;
#else
  return Lane::Scalar;
#endif
}

Lane active_lane() { return g_lane; }

void set_lane(Lane lane) {
  if (!lane_available(lane)) {
    throw std::invalid_argument("kernel lane not available on this machine");
  }
  g_lane = lane;
  g_table = &table_for(lane);
}

const char* lane_name(Lane lane) {
  switch (lane) {
    case Lane::Scalar:
      return "scalar";
    case Lane::Avx2:
      return "avx2";
    case Lane::Neon:
      return "neon";
  }
  return "unknown";
}

double dot(const double* a, const double* b, std::size_t n) {
  return g_table->dot(a, b, n);
}

void axpy(double* y, const double* x, double c, std::size_t n) {
  g_table->axpy(y, x, c, n);
}

void sq_accumulate(double* acc, const double* row, std::size_t n) {
  g_table->sq_accumulate(acc, row, n);
}

void axpy_sq_accumulate(double* row, const double* u, double c, double* colsq,
                        std::size_t n) {
  g_table->axpy_sq_accumulate(row, u, c, colsq, n);
}

}  // namespace specsplit::kernels
