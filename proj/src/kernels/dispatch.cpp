#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace xyrc::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(XYRC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", scalar::add_scaled_cos_diff, scalar::add_scaled, scalar::cos_inplace,
                             scalar::exp_inplace, scalar::weighted_moments};
  return set;
}

const KernelSet* avx2_kernels() {
#if defined(XYRC_HAVE_AVX2)
  static const KernelSet set{"avx2", avx2::add_scaled_cos_diff, avx2::add_scaled, avx2::cos_inplace,
                             avx2::exp_inplace, avx2::weighted_moments};
  static const bool supported = cpu_has_avx2();
  return supported ? &set : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& select_kernels(KernelChoice choice) {
  switch (choice) {
    case KernelChoice::Scalar: return scalar_kernels();
    case KernelChoice::Avx2:
      if (const KernelSet* k = avx2_kernels()) return *k;
      throw std::runtime_error("AVX2 kernels requested but not available on this build or CPU");
    case KernelChoice::Auto: break;
  }
  if (const KernelSet* k = avx2_kernels()) return *k;
  return scalar_kernels();
}

KernelChoice parse_kernel_choice(std::string_view text) {
  if (text == "auto") return KernelChoice::Auto;
  if (text == "scalar") return KernelChoice::Scalar;
  if (text == "avx2") return KernelChoice::Avx2;
  throw std::invalid_argument("unknown kernel '" + std::string(text) + "' (expected auto, scalar or avx2)");
}

}  // namespace xyrc::kernels
