// Compiled with -mavx2 -mfma; only reached through the dispatcher after a CPU
// check. Keep this file free of inline library helpers: any inline function
// instantiated here could be emitted with AVX2 code and picked by the linker
// for callers on other CPUs.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace xyrc::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

// exp(x) = 2^k · exp(r), r = x − k·ln2 with |r| ≤ ln2/2; Taylor to r^13.
// Inputs below −708 flush to 0 (no subnormals), inputs above 709 saturate.
inline __m256d vexp(__m256d x) {
  const __m256d lo = _mm256_set1_pd(-708.0);
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  x = _mm256_max_pd(_mm256_min_pd(x, hi), lo);

  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.44269504088896340736)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(6.93147180369123816490e-01), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(1.90821492927058770002e-10), r);

  __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);  // 1/13!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  const __m256i k64 = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(k));
  const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(k64, _mm256_set1_epi64x(1023)), 52);
  const __m256d scaled = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
  return _mm256_andnot_pd(underflow, scaled);
}

// cos(x): quadrant reduction by π/2 in three parts (exact products for
// |q| < 2^20), then Taylor polynomials for sin and cos on |r| ≤ π/4.
inline __m256d vcos(__m256d x) {
  const __m256d q = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(6.36619772367581382433e-01)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(q, _mm256_set1_pd(1.57079632673412561417e+00), x);
  r = _mm256_fnmadd_pd(q, _mm256_set1_pd(6.07710050630396597660e-11), r);
  r = _mm256_fnmadd_pd(q, _mm256_set1_pd(2.02226624871116645580e-21), r);
  const __m256d r2 = _mm256_mul_pd(r, r);

  __m256d s = _mm256_set1_pd(1.0 / 355687428096000.0);  // 1/17!
  s = _mm256_fmadd_pd(s, r2, _mm256_set1_pd(-1.0 / 1307674368000.0));
  s = _mm256_fmadd_pd(s, r2, _mm256_set1_pd(1.0 / 6227020800.0));
  s = _mm256_fmadd_pd(s, r2, _mm256_set1_pd(-1.0 / 39916800.0));
  s = _mm256_fmadd_pd(s, r2, _mm256_set1_pd(1.0 / 362880.0));
  s = _mm256_fmadd_pd(s, r2, _mm256_set1_pd(-1.0 / 5040.0));
  s = _mm256_fmadd_pd(s, r2, _mm256_set1_pd(1.0 / 120.0));
  s = _mm256_fmadd_pd(s, r2, _mm256_set1_pd(-1.0 / 6.0));
  s = _mm256_fmadd_pd(_mm256_mul_pd(s, r2), r, r);

  __m256d c = _mm256_set1_pd(1.0 / 20922789888000.0);  // 1/16!
  c = _mm256_fmadd_pd(c, r2, _mm256_set1_pd(-1.0 / 87178291200.0));
  c = _mm256_fmadd_pd(c, r2, _mm256_set1_pd(1.0 / 479001600.0));
  c = _mm256_fmadd_pd(c, r2, _mm256_set1_pd(-1.0 / 3628800.0));
  c = _mm256_fmadd_pd(c, r2, _mm256_set1_pd(1.0 / 40320.0));
  c = _mm256_fmadd_pd(c, r2, _mm256_set1_pd(-1.0 / 720.0));
  c = _mm256_fmadd_pd(c, r2, _mm256_set1_pd(1.0 / 24.0));
  c = _mm256_fmadd_pd(c, r2, _mm256_set1_pd(-0.5));
  c = _mm256_fmadd_pd(c, r2, _mm256_set1_pd(1.0));

  // quadrant 0: cos r, 1: −sin r, 2: −cos r, 3: sin r
  const __m256i qi = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(q));
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d use_sin = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(qi, one), one));
  const __m256d negate =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(_mm256_add_epi64(qi, one), two), two));
  const __m256d value = _mm256_blendv_pd(c, s, use_sin);
  return _mm256_xor_pd(value, _mm256_and_pd(negate, _mm256_set1_pd(-0.0)));
}

inline void copy_tail(const double* src, double* dst, std::size_t count, double fill) {
  for (std::size_t i = 0; i < kLanes; ++i) dst[i] = i < count ? src[i] : fill;
}

}  // namespace

void add_scaled_cos_diff(double scale, const double* a, const double* b, double* acc, std::size_t n) {
  const __m256d s = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(s, vcos(d), _mm256_loadu_pd(acc + i)));
  }
  if (i < n) {
    alignas(32) double ta[kLanes], tb[kLanes], tacc[kLanes];
    copy_tail(a + i, ta, n - i, 0.0);
    copy_tail(b + i, tb, n - i, 0.0);
    copy_tail(acc + i, tacc, n - i, 0.0);
    const __m256d d = _mm256_sub_pd(_mm256_load_pd(ta), _mm256_load_pd(tb));
    _mm256_store_pd(tacc, _mm256_fmadd_pd(s, vcos(d), _mm256_load_pd(tacc)));
    for (std::size_t j = 0; i + j < n; ++j) acc[i + j] = tacc[j];
  }
}

void add_scaled(double scale, const double* a, double* acc, std::size_t n) {
  const __m256d s = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(s, _mm256_loadu_pd(a + i), _mm256_loadu_pd(acc + i)));
  for (; i < n; ++i) acc[i] += scale * a[i];
}

void cos_inplace(double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) _mm256_storeu_pd(x + i, vcos(_mm256_loadu_pd(x + i)));
  if (i < n) {
    alignas(32) double t[kLanes];
    copy_tail(x + i, t, n - i, 0.0);
    _mm256_store_pd(t, vcos(_mm256_load_pd(t)));
    for (std::size_t j = 0; i + j < n; ++j) x[i + j] = t[j];
  }
}

void exp_inplace(double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) _mm256_storeu_pd(x + i, vexp(_mm256_loadu_pd(x + i)));
  if (i < n) {
    alignas(32) double t[kLanes];
    copy_tail(x + i, t, n - i, 0.0);
    _mm256_store_pd(t, vexp(_mm256_load_pd(t)));
    for (std::size_t j = 0; i + j < n; ++j) x[i + j] = t[j];
  }
}

WeightedMoments weighted_moments(const double* exponent, const double* observable, std::size_t n) {
  __m256d w = _mm256_setzero_pd();
  __m256d wo = _mm256_setzero_pd();
  __m256d w2 = _mm256_setzero_pd();
  __m256d w2o = _mm256_setzero_pd();
  __m256d w2o2 = _mm256_setzero_pd();
  auto step = [&](__m256d e, __m256d o) {
    const __m256d wi = vexp(e);
    const __m256d wi2 = _mm256_mul_pd(wi, wi);
    const __m256d wi2o = _mm256_mul_pd(wi2, o);
    w = _mm256_add_pd(w, wi);
    wo = _mm256_fmadd_pd(wi, o, wo);
    w2 = _mm256_add_pd(w2, wi2);
    w2o = _mm256_add_pd(w2o, wi2o);
    w2o2 = _mm256_fmadd_pd(wi2o, o, w2o2);
  };
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) step(_mm256_loadu_pd(exponent + i), _mm256_loadu_pd(observable + i));
  if (i < n) {
    // Padding lanes get exp(−∞) = 0 and contribute nothing.
    alignas(32) double te[kLanes], to[kLanes];
    copy_tail(exponent + i, te, n - i, -1.0e300);
    copy_tail(observable + i, to, n - i, 0.0);
    step(_mm256_load_pd(te), _mm256_load_pd(to));
  }
  alignas(32) double lanes[5][kLanes];
  _mm256_store_pd(lanes[0], w);
  _mm256_store_pd(lanes[1], wo);
  _mm256_store_pd(lanes[2], w2);
  _mm256_store_pd(lanes[3], w2o);
  _mm256_store_pd(lanes[4], w2o2);
  double sums[5];
  for (int k = 0; k < 5; ++k) sums[k] = (lanes[k][0] + lanes[k][1]) + (lanes[k][2] + lanes[k][3]);
  WeightedMoments m;
  m.w = sums[0];
  m.wo = sums[1];
  m.w2 = sums[2];
  m.w2o = sums[3];
  m.w2o2 = sums[4];
  return m;
}

}  // namespace xyrc::kernels::avx2
