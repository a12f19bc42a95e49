#include <cmath>

#include "kernels_internal.hpp"

namespace xyrc::kernels::scalar {

void add_scaled_cos_diff(double scale, const double* a, const double* b, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += scale * std::cos(a[i] - b[i]);
}

void add_scaled(double scale, const double* a, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += scale * a[i];
}

void cos_inplace(double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = std::cos(x[i]);
}

void exp_inplace(double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(x[i]);
}

WeightedMoments weighted_moments(const double* exponent, const double* observable, std::size_t n) {
  WeightedMoments m;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::exp(exponent[i]);
    const double o = observable[i];
    const double w2 = w * w;
    m.w += w;
    m.wo += w * o;
    m.w2 += w2;
    m.w2o += w2 * o;
    m.w2o2 += w2 * o * o;
  }
  return m;
}

}  // namespace xyrc::kernels::scalar
