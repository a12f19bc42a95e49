#pragma once

#include <cstddef>
#include <string_view>

// Batch arithmetic behind the numerical oracle. Each kernel set has the same
// contract; the scalar set is the reference and uses <cmath>, the AVX2 set uses
// its own vectorized cos/exp and must agree with the reference to ~1e-14
// relative (tests/test_kernels.cpp).

namespace xyrc::kernels {

/// Sums over a batch with w_i = exp(exponent_i), o_i = observable_i.
struct WeightedMoments {
  double w = 0;      // Σ w
  double wo = 0;     // Σ w·o
  double w2 = 0;     // Σ w²
  double w2o = 0;    // Σ w²·o
  double w2o2 = 0;   // Σ w²·o²

  WeightedMoments& operator+=(const WeightedMoments& other) noexcept {
    w += other.w;
    wo += other.wo;
    w2 += other.w2;
    w2o += other.w2o;
    w2o2 += other.w2o2;
    return *this;
  }
};

struct KernelSet {
  std::string_view name;
  /// acc[i] += scale · cos(a[i] − b[i])
  void (*add_scaled_cos_diff)(double scale, const double* a, const double* b, double* acc, std::size_t n);
  /// acc[i] += scale · a[i]
  void (*add_scaled)(double scale, const double* a, double* acc, std::size_t n);
  /// x[i] = cos(x[i])
  void (*cos_inplace)(double* x, std::size_t n);
  /// x[i] = exp(x[i])
  void (*exp_inplace)(double* x, std::size_t n);
  WeightedMoments (*weighted_moments)(const double* exponent, const double* observable, std::size_t n);
};

enum class KernelChoice { Auto, Scalar, Avx2 };

const KernelSet& scalar_kernels();

/// nullptr when the AVX2 set was not compiled in or the CPU lacks AVX2+FMA.
const KernelSet* avx2_kernels();

/// Auto picks AVX2 when available. Requesting Avx2 on a machine without it
/// throws std::runtime_error.
const KernelSet& select_kernels(KernelChoice choice);

KernelChoice parse_kernel_choice(std::string_view text);

}  // namespace xyrc::kernels
