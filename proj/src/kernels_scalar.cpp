#include "littlewood/kernels.hpp"

#include <bit>
#include <cstdint>
#include <limits>

namespace littlewood::kernels {

void gray_eval_scalar(Cplx start, const Cplx* deltas, int nbits, Cplx* out) {
  Cplx acc = start;
  out[0] = acc;
  const std::uint64_t count = std::uint64_t{1} << nbits;
  for (std::uint64_t i = 1; i < count; ++i) {
    const int j = std::countr_zero(i);
    const std::uint64_t gray = i ^ (i >> 1);
    // Bit j just toggled; set means the coefficient went +1 -> -1.
    if ((gray >> j) & 1)
      acc -= deltas[j];
    else
      acc += deltas[j];
    out[gray] = acc;
  }
}

double min_abs2_scalar(const Cplx* pts, std::size_t n) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double re = pts[i].real();
    const double im = pts[i].imag();
    const double a2 = re * re + im * im;
    if (a2 < best) best = a2;
  }
  return best;
}

}  // namespace littlewood::kernels
