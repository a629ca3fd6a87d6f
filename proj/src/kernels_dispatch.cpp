#include "littlewood/kernels.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>

namespace littlewood::kernels {

namespace {
std::atomic<bool> g_force_scalar{false};

bool detect_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  if (std::getenv("LW_NO_SIMD")) return false;
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
}  // namespace

bool have_avx2() {
  static const bool ok = detect_avx2();
  return ok && !g_force_scalar.load(std::memory_order_relaxed);
}

void force_scalar(bool on) {
  g_force_scalar.store(on, std::memory_order_relaxed);
}

void gray_eval_chunks(const Cplx* starts, std::size_t nchunks,
                      const Cplx* deltas, int nbits, Cplx* out) {
  const std::uint64_t chunk_len = std::uint64_t{1} << nbits;
  std::size_t c = 0;
  if (have_avx2()) {
    for (; c + 4 <= nchunks; c += 4)
      gray_eval_chunk4_avx2(starts + c, deltas, nbits, out + c * chunk_len);
  }
  for (; c < nchunks; ++c)
    gray_eval_scalar(starts[c], deltas, nbits, out + c * chunk_len);
}

double min_abs2(const Cplx* pts, std::size_t n) {
  if (n == 0) return std::numeric_limits<double>::infinity();
  if (have_avx2()) return min_abs2_avx2(pts, n);
  return min_abs2_scalar(pts, n);
}

}  // namespace littlewood::kernels
