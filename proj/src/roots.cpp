#include "littlewood/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "littlewood/kernels.hpp"
#include "parallel.hpp"

namespace littlewood {

namespace {

// p(z) and p'(z) in one Horner pass.
void eval_with_derivative(const SignVector& p, Cplx z, Cplx& value,
                          Cplx& deriv) {
  Cplx v = static_cast<double>(coefficient(p, p.degree));
  Cplx dv = 0.0;
  for (int j = p.degree - 1; j >= 0; --j) {
    dv = dv * z + v;
    v = v * z + static_cast<double>(coefficient(p, j));
  }
  value = v;
  deriv = dv;
}

constexpr double kStartAngleOffset = 0.4;  // radians

// Simultaneous-correction iteration. Returns true when every correction
// dropped below cfg.tol relative.
bool aberth_ehrlich(const SignVector& p, const SolverConfig& cfg,
                    std::vector<Cplx>& roots) {
  const int d = p.degree;
  roots.resize(d);
  for (int k = 0; k < d; ++k) {
    const double theta =
        2.0 * std::numbers::pi * k / d + kStartAngleOffset;
    roots[k] = Cplx{std::cos(theta), std::sin(theta)};
  }
  if (d == 1) {  // Newton on a line is exact
    roots[0] = -static_cast<double>(coefficient(p, 0)) /
               static_cast<double>(coefficient(p, 1));
    return true;
  }
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < d; ++k) {
      Cplx v, dv;
      eval_with_derivative(p, roots[k], v, dv);
      if (v == Cplx{0.0, 0.0}) continue;
      if (dv == Cplx{0.0, 0.0}) {  // stationary start; nudge off it
        roots[k] += Cplx{1e-8, 1e-8};
        worst = 1.0;
        continue;
      }
      const Cplx newton = v / dv;
      Cplx repulsion = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        const Cplx diff = roots[k] - roots[j];
        if (diff == Cplx{0.0, 0.0}) continue;
        repulsion += 1.0 / diff;
      }
      const Cplx denom = 1.0 - newton * repulsion;
      const Cplx w = denom == Cplx{0.0, 0.0} ? newton : newton / denom;
      roots[k] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(roots[k])));
    }
    if (worst <= cfg.tol) return true;
  }
  return false;
}

// Parlett-Reinsch style balancing with power-of-two scale factors.
void balance(Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double c = a.col(i).cwiseAbs().sum() - std::abs(a(i, i));
      double r = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      while (c < r / 2.0) {
        c *= 2.0;
        r /= 2.0;
        f *= 2.0;
      }
      while (c >= r * 2.0) {
        c /= 2.0;
        r *= 2.0;
        f /= 2.0;
      }
      if (f != 1.0 && c + r < 0.95 * s) {
        done = false;
        a.col(i) *= f;
        a.row(i) /= f;
      }
    }
  }
}

std::vector<Cplx> companion_roots(const SignVector& p) {
  // Work with the monic copy; p and -p share roots.
  const SignVector q = coefficient(p, p.degree) == 1 ? p : negate(p);
  const int d = q.degree;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) a(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i)
    a(i, d - 1) = -static_cast<double>(coefficient(q, i));
  balance(a);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<Cplx> roots(d);
  for (int i = 0; i < d; ++i)
    roots[i] = Cplx{solver.eigenvalues()[i].real(),
                    solver.eigenvalues()[i].imag()};
  return roots;
}

// A couple of Newton steps, keeping a step only when it lowers |p|.
void polish(const SignVector& p, std::vector<Cplx>& roots) {
  for (Cplx& r : roots) {
    for (int step = 0; step < 3; ++step) {
      Cplx v, dv;
      eval_with_derivative(p, r, v, dv);
      if (v == Cplx{0.0, 0.0} || dv == Cplx{0.0, 0.0}) break;
      const Cplx candidate = r - v / dv;
      Cplx v2, dv2;
      eval_with_derivative(p, candidate, v2, dv2);
      if (std::abs(v2) >= std::abs(v)) break;
      r = candidate;
    }
  }
}

// Newton stalls at ~eps^(1/m) distance from an m-fold root, leaving a
// satellite cluster whose first-order errors cancel in the mean. Collapse
// each tight cluster to its centroid when that demonstrably does not hurt
// the residual; a cluster of merely close distinct roots fails the
// residual test and is left alone.
void collapse_multiple_roots(const SignVector& p, std::vector<Cplx>& roots) {
  const int n = static_cast<int>(roots.size());
  std::vector<int> group(n);
  for (int i = 0; i < n; ++i) group[i] = i;
  const auto find = [&](int i) {
    while (group[i] != i) i = group[i] = group[group[i]];
    return i;
  };
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <=
          1e-4 * (1.0 + std::abs(roots[i]))) {
        group[find(i)] = find(j);
        any = true;
      }
  if (!any) return;

  for (int rep = 0; rep < n; ++rep) {
    if (find(rep) != rep) continue;
    Cplx sum{};
    int count = 0;
    double best = std::numeric_limits<double>::infinity();
    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
      if (find(i) != rep) continue;
      sum += roots[i];
      ++count;
      best = std::min(best, std::abs(horner_eval(p, roots[i])));
      scale = std::max(scale, std::abs(roots[i]));
    }
    if (count < 2) continue;
    const Cplx centroid = sum / static_cast<double>(count);
    // |p| evaluation noise floor at this magnitude
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         (p.degree + 1) * std::pow(scale, p.degree);
    if (std::abs(horner_eval(p, centroid)) <= std::max(best, floor))
      for (int i = 0; i < n; ++i)
        if (find(i) == rep) roots[i] = centroid;
  }
}

// Real coefficients force a conjugation-closed root multiset; enforce it
// exactly so downstream renders are mirror symmetric. The multiset is
// greedily matched against its own conjugate (closest pairs first, no
// distance cutoff — the exact multiset always admits a perfect matching),
// then each pair is averaged; a root matched with itself becomes real.
// Clusters around multiple real roots land on the self/cross match whose
// gap is smallest, so they symmetrize correctly even when the solver
// error dwarfs any fixed pairing tolerance.
void conjugate_symmetrize(std::vector<Cplx>& roots) {
  const int n = static_cast<int>(roots.size());
  std::vector<bool> done(n, false);
  for (int matched = 0; matched < n;) {
    int bi = -1, bj = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      for (int j = i; j < n; ++j) {
        if (done[j]) continue;
        const double dist = std::abs(roots[i] - std::conj(roots[j]));
        if (dist < best) {
          best = dist;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == bj) {
      roots[bi] = Cplx{roots[bi].real(), 0.0};
      done[bi] = true;
      ++matched;
    } else {
      const Cplx mean = 0.5 * (roots[bi] + std::conj(roots[bj]));
      roots[bi] = mean;
      roots[bj] = std::conj(mean);
      done[bi] = done[bj] = true;
      matched += 2;
    }
  }
}

}  // namespace

std::vector<RootRecord> roots_of(const SignVector& p,
                                 const SolverConfig& cfg) {
  check_degree(p.degree);
  if (cfg.tol <= 0.0 || cfg.max_iter < 1)
    throw std::invalid_argument("bad solver config");

  std::vector<Cplx> roots;
  bool aberth_ok = aberth_ehrlich(p, cfg, roots);
  bool used_fallback = false;
  if (!aberth_ok && cfg.fallback_enabled) {
    roots = companion_roots(p);
    used_fallback = true;
  }
  polish(p, roots);
  collapse_multiple_roots(p, roots);
  conjugate_symmetrize(roots);
  std::sort(roots.begin(), roots.end(), [](Cplx a, Cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  const double residual_bound = 1e-8 * (p.degree + 1);
  std::vector<RootRecord> out;
  out.reserve(roots.size());
  for (Cplx r : roots) {
    const double residual = std::abs(horner_eval(p, r));
    const bool converged =
        aberth_ok ? true : (used_fallback && residual <= residual_bound);
    out.push_back(RootRecord{r, p.mask, p.degree, residual, converged});
  }
  return out;
}

void zero_set(int d_max, const SolverConfig& cfg,
              const std::function<void(const RootRecord&)>& sink,
              int workers) {
  check_degree(d_max);
  constexpr std::uint64_t kBlock = 1024;
  for (int d = 1; d <= d_max; ++d) {
    const std::uint64_t half = std::uint64_t{1} << d;  // leading coeff +1
    for (std::uint64_t base = 0; base < half; base += kBlock) {
      const std::uint64_t n = std::min(kBlock, half - base);
      std::vector<std::vector<RootRecord>> slots(n);
      detail::parallel_blocks(n, workers,
                              [&](std::uint64_t b, std::uint64_t e) {
                                for (std::uint64_t i = b; i < e; ++i)
                                  slots[i] = roots_of(
                                      SignVector{d, base + i}, cfg);
                              });
      for (const auto& records : slots)
        for (const RootRecord& rec : records) sink(rec);
    }
  }
}

MembershipReport epsilon_membership(Cplx z, int degree, double eps,
                                    MembershipMode mode, int nu_value) {
  check_degree(degree);
  check_finite(z);
  if (eps <= 0.0) throw std::invalid_argument("epsilon must be positive");

  MembershipReport report;
  report.query = z;
  report.degree = degree;
  report.epsilon = eps;
  report.mode = mode;

  double min2;
  if (mode == MembershipMode::exact) {
    const std::uint64_t total = std::uint64_t{1} << degree;
    constexpr std::uint64_t kStripe = std::uint64_t{1} << 20;
    min2 = std::numeric_limits<double>::infinity();
    for (std::uint64_t lo = 0; lo < total; lo += kStripe) {
      const std::uint64_t hi = std::min(total, lo + kStripe);
      const EvalSet stripe = eval_all(degree, z, Subset::half_constant_positive,
                                      -1, std::pair{lo, hi});
      min2 = std::min(min2, kernels::min_abs2(stripe.points.data(),
                                              stripe.points.size()));
    }
    report.evaluations_used = total;
  } else {
    report.nu_value = nu_value;
    const EvalSet set = eval_all(degree, z, Subset::nu_class, nu_value);
    min2 = kernels::min_abs2(set.points.data(), set.points.size());
    report.evaluations_used = set.points.size();
  }
  report.min_modulus = std::sqrt(min2);
  report.member = report.min_modulus < eps;
  return report;
}

ApproxCostReport approx_cost_report(int degree) {
  check_degree(degree);
  ApproxCostReport r;
  r.full = std::uint64_t{1} << (degree + 1);
  r.paper_formula = binomial(degree, (degree + 1) / 2);
  r.corrected = binomial(degree + 1, (degree + 2) / 2);
  return r;
}

}  // namespace littlewood
