#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "littlewood/core.hpp"

namespace littlewood {

using Cplx = std::complex<double>;

/// Throws if either component is NaN or infinite.
void check_finite(Cplx z);

enum class Subset {
  full,                    // all 2^{d+1} sign patterns
  half_constant_positive,  // constant term +1 (bit 0 clear), 2^d patterns
  nu_class,                // N_d(n), C(d+1, n) patterns
  generators,              // S_d, d+1 patterns
};

/// Evaluations of a whole family of Littlewood polynomials at one point,
/// in the family's canonical enumeration order (ascending mask, or
/// ascending generator position).
struct EvalSet {
  int degree = 1;
  Cplx at{};
  Subset subset = Subset::full;
  int nu_value = -1;  // meaningful for Subset::nu_class only
  std::vector<Cplx> points;
};

/// p(z) by Horner recurrence from the leading coefficient down.
Cplx horner_eval(const SignVector& p, Cplx z);

/// {1, z, z^2, ..., z^degree}.
std::vector<Cplx> power_table(int degree, Cplx z);

/// e(z) computed indirectly as (1/(d-1)) * sum of generator evaluations.
/// Requires d >= 2.
Cplx eval_identity_via_generators(int degree, Cplx z);

/// p(z) computed as (1 - nu(p)) e(z) + sum over sigma(p) of g(z).
Cplx eval_via_factorization(const SignVector& p, Cplx z);

/// Images of generators(d) at z, in position order.
EvalSet eval_generators(int degree, Cplx z);

/// Evaluates every polynomial of the subset at z via incremental
/// single-bit-flip updates, reporting points in ascending mask order.
/// `range` restricts full/half subsets to masks (half: mask/2) in [lo, hi).
/// Results are byte-identical for any worker count.
EvalSet eval_all(int degree, Cplx z, Subset subset, int nu_value = -1,
                 std::optional<std::pair<std::uint64_t, std::uint64_t>> range =
                     std::nullopt,
                 int workers = 1);

/// Point cap for eval_all / orbit buffers (2^26 complex values = 1 GiB).
inline constexpr std::uint64_t kPointBudget = std::uint64_t{1} << 26;

}  // namespace littlewood
