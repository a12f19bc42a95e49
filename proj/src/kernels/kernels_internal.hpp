#pragma once

#include <cstddef>

#include "xyrc/kernels.hpp"

namespace xyrc::kernels {

namespace scalar {
void add_scaled_cos_diff(double scale, const double* a, const double* b, double* acc, std::size_t n);
void add_scaled(double scale, const double* a, double* acc, std::size_t n);
void cos_inplace(double* x, std::size_t n);
void exp_inplace(double* x, std::size_t n);
WeightedMoments weighted_moments(const double* exponent, const double* observable, std::size_t n);
}  // namespace scalar

#if defined(XYRC_HAVE_AVX2)
namespace avx2 {
void add_scaled_cos_diff(double scale, const double* a, const double* b, double* acc, std::size_t n);
void add_scaled(double scale, const double* a, double* acc, std::size_t n);
void cos_inplace(double* x, std::size_t n);
void exp_inplace(double* x, std::size_t n);
WeightedMoments weighted_moments(const double* exponent, const double* observable, std::size_t n);
}  // namespace avx2
#endif

}  // namespace xyrc::kernels
