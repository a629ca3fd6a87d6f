// AVX2 variants. This translation unit is compiled with -mavx2; callers
// must check have_avx2() first.

#include "littlewood/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstdint>
#include <limits>

namespace littlewood::kernels {

void gray_eval_chunk4_avx2(const Cplx starts[4], const Cplx* deltas, int nbits,
                           Cplx* out) {
  const std::uint64_t count = std::uint64_t{1} << nbits;
  double* o = reinterpret_cast<double*>(out);
  // Lanes 0..1 in acc01, lanes 2..3 in acc23; each __m256d holds two
  // interleaved (re, im) complex values.
  __m256d acc01 = _mm256_loadu_pd(reinterpret_cast<const double*>(starts));
  __m256d acc23 = _mm256_loadu_pd(reinterpret_cast<const double*>(starts) + 4);

  const auto store4 = [&](std::uint64_t t) {
    _mm_storeu_pd(o + 2 * t, _mm256_castpd256_pd128(acc01));
    _mm_storeu_pd(o + 2 * (count + t), _mm256_extractf128_pd(acc01, 1));
    _mm_storeu_pd(o + 2 * (2 * count + t), _mm256_castpd256_pd128(acc23));
    _mm_storeu_pd(o + 2 * (3 * count + t), _mm256_extractf128_pd(acc23, 1));
  };

  store4(0);
  for (std::uint64_t i = 1; i < count; ++i) {
    const int j = std::countr_zero(i);
    const std::uint64_t gray = i ^ (i >> 1);
    const __m256d d = _mm256_broadcast_pd(
        reinterpret_cast<const __m128d*>(deltas + j));
    if ((gray >> j) & 1) {
      acc01 = _mm256_sub_pd(acc01, d);
      acc23 = _mm256_sub_pd(acc23, d);
    } else {
      acc01 = _mm256_add_pd(acc01, d);
      acc23 = _mm256_add_pd(acc23, d);
    }
    store4(gray);
  }
}

double min_abs2_avx2(const Cplx* pts, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(pts);
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(p + 2 * i);
    const __m256d sq = _mm256_mul_pd(v, v);
    // hadd within 128-bit lanes: [re0²+im0², ., re1²+im1², .]
    best = _mm256_min_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = lanes[0] < lanes[2] ? lanes[0] : lanes[2];
  for (; i < n; ++i) {
    const double re = p[2 * i], im = p[2 * i + 1];
    const double a2 = re * re + im * im;
    if (a2 < out) out = a2;
  }
  return out;
}

}  // namespace littlewood::kernels

#else

#include <stdexcept>

namespace littlewood::kernels {

void gray_eval_chunk4_avx2(const Cplx*, const Cplx*, int, Cplx*) {
  throw std::logic_error("AVX2 kernel called on non-x86 build");
}

double min_abs2_avx2(const Cplx*, std::size_t) {
  throw std::logic_error("AVX2 kernel called on non-x86 build");
}

}  // namespace littlewood::kernels

#endif
