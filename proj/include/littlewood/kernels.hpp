#pragma once

#include <complex>
#include <cstddef>

// Inner arithmetic kernels: scalar reference implementations plus AVX2
// variants selected at runtime. Per-lane operation order is identical in
// both variants, so outputs are bit-for-bit equal.

namespace littlewood::kernels {

using Cplx = std::complex<double>;

bool have_avx2();

/// Overrides runtime dispatch (testing hook). 0 = scalar, 1 = auto.
void force_scalar(bool on);

/// Gray-code walk over nbits flip positions. deltas[j] is the value step
/// 2*z^{pos_j} for walk bit j. Writes the evaluation for every local bit
/// pattern t in [0, 2^nbits) to out[t]; out[0] = start.
void gray_eval_scalar(Cplx start, const Cplx* deltas, int nbits, Cplx* out);

/// Four independent chunks walked in lockstep; chunk c starts at starts[c]
/// and writes to out + c*2^nbits. Requires AVX2.
void gray_eval_chunk4_avx2(const Cplx starts[4], const Cplx* deltas, int nbits,
                           Cplx* out);

/// Dispatched front end: nchunks chunks of 2^nbits patterns each, written
/// contiguously to out.
void gray_eval_chunks(const Cplx* starts, std::size_t nchunks,
                      const Cplx* deltas, int nbits, Cplx* out);

double min_abs2_scalar(const Cplx* pts, std::size_t n);
double min_abs2_avx2(const Cplx* pts, std::size_t n);

/// Dispatched min over |p|^2. Returns +inf for n = 0.
double min_abs2(const Cplx* pts, std::size_t n);

}  // namespace littlewood::kernels
