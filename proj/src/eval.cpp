#include "littlewood/eval.hpp"

#include <cmath>
#include <stdexcept>

#include "littlewood/kernels.hpp"
#include "parallel.hpp"

namespace littlewood {

namespace {

// Chunk granularity for the Gray-code walk. Each chunk restarts from an
// exact Horner value, so any sharding at chunk boundaries (and the AVX2
// four-chunk kernel) produces bit-identical output.
constexpr int kChunkBits = 12;

}  // namespace

void check_finite(Cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("non-finite complex point");
}

Cplx horner_eval(const SignVector& p, Cplx z) {
  check_finite(z);
  Cplx acc = static_cast<double>(coefficient(p, p.degree));
  for (int j = p.degree - 1; j >= 0; --j)
    acc = acc * z + static_cast<double>(coefficient(p, j));
  return acc;
}

std::vector<Cplx> power_table(int degree, Cplx z) {
  check_finite(z);
  std::vector<Cplx> pw(degree + 1);
  pw[0] = 1.0;
  for (int j = 1; j <= degree; ++j) pw[j] = pw[j - 1] * z;
  return pw;
}

Cplx eval_identity_via_generators(int degree, Cplx z) {
  check_degree(degree);
  if (degree < 2)
    throw std::invalid_argument("identity-via-generators needs degree >= 2");
  check_finite(z);
  Cplx sum = 0.0;
  for (int j = 0; j <= degree; ++j)
    sum += horner_eval(generator(degree, j), z);
  return sum / static_cast<double>(degree - 1);
}

Cplx eval_via_factorization(const SignVector& p, Cplx z) {
  check_finite(z);
  const Cplx ez = horner_eval(identity(p.degree), z);
  Cplx acc = (1.0 - nu(p)) * ez;
  for (const GeneratorIndex& g : sigma(p))
    acc += horner_eval(generator(g.degree, g.position), z);
  return acc;
}

EvalSet eval_generators(int degree, Cplx z) {
  check_degree(degree);
  check_finite(z);
  EvalSet out{degree, z, Subset::generators, -1, {}};
  out.points.reserve(degree + 1);
  for (int j = 0; j <= degree; ++j)
    out.points.push_back(horner_eval(generator(degree, j), z));
  return out;
}

namespace {

// Shared walk for full / half subsets. Walk integer t covers masks
// t << shift; shift = 0 (full) or 1 (half, constant term +1).
std::vector<Cplx> gray_family_eval(int degree, Cplx z, int shift,
                                   std::uint64_t lo, std::uint64_t hi,
                                   int workers) {
  const int nbits = degree + 1 - shift;
  const std::uint64_t total = std::uint64_t{1} << nbits;
  if (lo > hi || hi > total) throw std::out_of_range("eval_all: bad range");
  if (hi == lo) return {};

  const int cb = std::min(nbits, kChunkBits);
  const std::uint64_t chunk_len = std::uint64_t{1} << cb;
  const std::uint64_t c_lo = lo / chunk_len;
  const std::uint64_t c_hi = (hi + chunk_len - 1) / chunk_len;
  if ((c_hi - c_lo) * chunk_len > kPointBudget)
    throw std::length_error("eval_all: subset exceeds point budget");

  const std::vector<Cplx> pw = power_table(degree, z);
  std::vector<Cplx> deltas(cb);
  for (int j = 0; j < cb; ++j) deltas[j] = 2.0 * pw[j + shift];

  std::vector<Cplx> buf((c_hi - c_lo) * chunk_len);
  detail::parallel_blocks(c_hi - c_lo, workers, [&](std::uint64_t b,
                                                    std::uint64_t e) {
    std::vector<Cplx> starts(e - b);
    for (std::uint64_t c = b; c < e; ++c) {
      const std::uint64_t base_mask = ((c_lo + c) * chunk_len) << shift;
      starts[c - b] = horner_eval(SignVector{degree, base_mask}, z);
    }
    kernels::gray_eval_chunks(starts.data(), e - b, deltas.data(), cb,
                              buf.data() + b * chunk_len);
  });

  if (lo == c_lo * chunk_len && hi == c_hi * chunk_len) return buf;
  const std::uint64_t off = lo - c_lo * chunk_len;
  return std::vector<Cplx>(buf.begin() + off, buf.begin() + off + (hi - lo));
}

std::vector<Cplx> nu_class_eval(int degree, Cplx z, int n) {
  const std::uint64_t count = nu_class_size(degree, n);
  if (count > kPointBudget)
    throw std::length_error("eval_all: nu class exceeds point budget");
  const std::vector<Cplx> pw = power_table(degree, z);

  // Fixed-order signed power sum: negating every coefficient negates each
  // term and hence the result bit-for-bit, which makes the reflection
  // between N_d(k) and N_d(d+1-k) exact.
  std::vector<Cplx> out;
  out.reserve(count);
  enumerate_nu_class(NuClassDescriptor{degree, n}, [&](const SignVector& p) {
    Cplx acc = 0.0;
    for (int j = 0; j <= degree; ++j)
      acc += static_cast<double>(coefficient(p, j)) * pw[j];
    out.push_back(acc);
  });
  return out;
}

}  // namespace

EvalSet eval_all(int degree, Cplx z, Subset subset, int nu_value,
                 std::optional<std::pair<std::uint64_t, std::uint64_t>> range,
                 int workers) {
  check_degree(degree);
  check_finite(z);
  EvalSet out{degree, z, subset, -1, {}};
  switch (subset) {
    case Subset::full: {
      const std::uint64_t total = coefficient_mask(degree) + 1;
      const auto [lo, hi] = range.value_or(std::pair{std::uint64_t{0}, total});
      out.points = gray_family_eval(degree, z, 0, lo, hi, workers);
      break;
    }
    case Subset::half_constant_positive: {
      const std::uint64_t total = std::uint64_t{1} << degree;
      const auto [lo, hi] = range.value_or(std::pair{std::uint64_t{0}, total});
      out.points = gray_family_eval(degree, z, 1, lo, hi, workers);
      break;
    }
    case Subset::nu_class:
      if (range) throw std::invalid_argument("nu-class eval takes no range");
      out.nu_value = nu_value;
      out.points = nu_class_eval(degree, z, nu_value);
      break;
    case Subset::generators:
      return eval_generators(degree, z);
  }
  return out;
}

}  // namespace littlewood
