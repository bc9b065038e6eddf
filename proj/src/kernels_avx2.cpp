// Compiled with -mavx2; only reached after a runtime cpu check.
#include "lpi/kernels.hpp"

#include <immintrin.h>

namespace lpi::kernels {

namespace {

// r = x mod p for 0 <= x < 2^53, x integral. The quotient estimate is off by
// at most one, so a single correction in each direction suffices.
inline __m256d reduce(__m256d x, __m256d pd, __m256d pinv) {
  __m256d quo = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(quo, pd));
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, pd));
  __m256d big = _mm256_cmp_pd(r, pd, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(big, pd));
  return r;
}

inline __m256d load4(const std::uint32_t* s) {
  return _mm256_cvtepi32_pd(
      _mm_loadu_si128(reinterpret_cast<const __m128i*>(s)));
}

inline void store4(std::uint32_t* d, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(d), _mm256_cvttpd_epi32(v));
}

} // namespace

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                   std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_add_pd(load4(dst + i), _mm256_mul_pd(cd, load4(src + i)));
    store4(dst + i, reduce(x, pd, pinv));
  }
  axpy_mod_scalar(dst + i, src + i, n - i, c, p);
}

void scale_mod_avx2(std::uint32_t* v, std::size_t n, std::uint32_t c,
                    std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store4(v + i, reduce(_mm256_mul_pd(cd, load4(v + i)), pd, pinv));
  scale_mod_scalar(v + i, n - i, c, p);
}

} // namespace lpi::kernels
