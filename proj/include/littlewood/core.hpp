#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace littlewood {

// Masks are single 64-bit words, so degrees are capped at 62 (d+1 bits).
inline constexpr int kMaxDegree = 62;

/// A Littlewood polynomial p(z) = sum_{j=0}^{d} a_j z^j with a_j in {-1,+1},
/// stored as a bitmask: bit j set <=> a_j = -1. Under this encoding the
/// Hadamard product is XOR and the measure nu is a popcount.
struct SignVector {
  int degree = 1;
  std::uint64_t mask = 0;

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

struct GeneratorIndex {
  int degree = 1;
  int position = 0;

  friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
};

struct NuClassDescriptor {
  int degree = 1;
  int n = 0;
};

inline void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("degree must be in [1, 62]");
}

inline std::uint64_t coefficient_mask(int degree) {
  return (degree + 1 == 64) ? ~std::uint64_t{0}
                            : ((std::uint64_t{1} << (degree + 1)) - 1);
}

inline SignVector make_sign_vector(int degree, std::uint64_t mask) {
  check_degree(degree);
  if (mask & ~coefficient_mask(degree))
    throw std::invalid_argument("mask has bits above the degree");
  return SignVector{degree, mask};
}

/// The group identity e(z) = sum z^j (all coefficients +1).
inline SignVector identity(int degree) {
  check_degree(degree);
  return SignVector{degree, 0};
}

/// Coefficient a_j as +1 or -1.
inline int coefficient(const SignVector& p, int j) {
  return (p.mask >> j) & 1 ? -1 : 1;
}

inline SignVector generator(int degree, int position) {
  check_degree(degree);
  if (position < 0 || position > degree)
    throw std::invalid_argument("generator position out of range");
  return SignVector{degree, std::uint64_t{1} << position};
}

/// The generating set S_d: the d+1 polynomials with exactly one negative
/// coefficient, in ascending position order.
inline std::vector<SignVector> generators(int degree) {
  check_degree(degree);
  std::vector<SignVector> out;
  out.reserve(degree + 1);
  for (int j = 0; j <= degree; ++j) out.push_back(generator(degree, j));
  return out;
}

/// Hadamard product: component-wise sign multiplication, i.e. XOR of masks.
inline SignVector hadamard(const SignVector& p, const SignVector& q) {
  if (p.degree != q.degree)
    throw std::invalid_argument("hadamard: degree mismatch");
  return SignVector{p.degree, p.mask ^ q.mask};
}

/// -p: every coefficient sign flipped.
inline SignVector negate(const SignVector& p) {
  return SignVector{p.degree, p.mask ^ coefficient_mask(p.degree)};
}

/// nu(p): the number of negative coefficients. Ranges over 0..d+1
/// (nu(e) = 0 and nu(-e) = d+1).
inline int nu(const SignVector& p) { return std::popcount(p.mask); }

/// sigma(p): the unique subset of S_d whose Hadamard product is p,
/// in ascending position order. |sigma(p)| = nu(p).
inline std::vector<GeneratorIndex> sigma(const SignVector& p) {
  std::vector<GeneratorIndex> out;
  out.reserve(nu(p));
  std::uint64_t m = p.mask;
  while (m) {
    out.push_back(GeneratorIndex{p.degree, std::countr_zero(m)});
    m &= m - 1;
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r*(n-k+i) is divisible by i here
  }
  return static_cast<std::uint64_t>(r);
}

/// |N_d(n)| = C(d+1, n): the number of degree-d sign patterns with n
/// negative coefficients.
inline std::uint64_t nu_class_size(int degree, int n) {
  check_degree(degree);
  if (n < 0 || n > degree + 1) throw std::invalid_argument("nu out of range");
  return binomial(degree + 1, n);
}

/// Visits every SignVector with mask in [lo, hi) in ascending mask order.
template <class F>
void enumerate(int degree, std::uint64_t lo, std::uint64_t hi, F&& f) {
  check_degree(degree);
  const std::uint64_t limit = coefficient_mask(degree) + 1;
  if (lo > hi || hi > limit) throw std::out_of_range("enumerate: bad range");
  for (std::uint64_t m = lo; m < hi; ++m) f(SignVector{degree, m});
}

/// Visits every member of N_d(n) in ascending mask order (Gosper's hack).
template <class F>
void enumerate_nu_class(const NuClassDescriptor& c, F&& f) {
  check_degree(c.degree);
  if (c.n < 0 || c.n > c.degree + 1)
    throw std::invalid_argument("nu class index out of range");
  if (c.n == 0) {
    f(SignVector{c.degree, 0});
    return;
  }
  const std::uint64_t limit = coefficient_mask(c.degree) + 1;
  std::uint64_t m = (std::uint64_t{1} << c.n) - 1;
  while (m < limit) {
    f(SignVector{c.degree, m});
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t ripple = m + low;
    if (ripple == 0) break;
    m = (((ripple ^ m) >> 2) / low) | ripple;
  }
}

}  // namespace littlewood
