#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "littlewood/eval.hpp"

namespace littlewood {

struct SolverConfig {
  double tol = 1e-12;     // relative root-correction stopping threshold
  int max_iter = 120;
  bool fallback_enabled = true;  // companion-matrix rescue
};

struct RootRecord {
  Cplx root{};
  std::uint64_t mask = 0;
  int degree = 1;
  double residual = 0.0;  // |p(root)|
  bool converged = false;
};

/// All d roots of p (with multiplicity), in ascending (re, im) order.
/// Simultaneous-correction (Aberth-Ehrlich) iteration from deterministic
/// unit-circle starting points; companion-matrix eigenvalues as fallback.
/// The output is conjugation-symmetrized: near-real roots get imaginary
/// part exactly 0 and conjugate pairs are made exact.
std::vector<RootRecord> roots_of(const SignVector& p, const SolverConfig& cfg);

/// Roots of every degree-d polynomial with leading coefficient +1 (p and
/// -p share roots, so this covers all of D_d), for d = 1..d_max, streamed
/// in (degree, mask, root-index) order. Worker count never changes the
/// emitted records.
void zero_set(int d_max, const SolverConfig& cfg,
              const std::function<void(const RootRecord&)>& sink,
              int workers = 1);

enum class MembershipMode { exact, nu_class };

struct MembershipReport {
  Cplx query{};
  int degree = 1;
  double epsilon = 0.0;
  bool member = false;
  double min_modulus = 0.0;
  std::uint64_t evaluations_used = 0;
  MembershipMode mode = MembershipMode::exact;
  int nu_value = -1;
};

/// Does min over the family of |p(z)| fall below eps? Exact mode scans the
/// constant-term-positive half of L_d (|(-p)(z)| = |p(z)|); nu-class mode
/// scans N_d(k) only.
MembershipReport epsilon_membership(Cplx z, int degree, double eps,
                                    MembershipMode mode, int nu_value = -1);

struct ApproxCostReport {
  std::uint64_t full = 0;           // 2^{d+1}
  std::uint64_t paper_formula = 0;  // C(d, ceil(d/2))
  std::uint64_t corrected = 0;      // C(d+1, ceil((d+1)/2))
};

ApproxCostReport approx_cost_report(int degree);

}  // namespace littlewood
