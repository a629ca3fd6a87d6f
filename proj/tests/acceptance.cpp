// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "littlewood/core.hpp"
#include "littlewood/eval.hpp"
#include "littlewood/ifs.hpp"
#include "littlewood/raster.hpp"
#include "littlewood/roots.hpp"

namespace fs = std::filesystem;
using namespace littlewood;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s  criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++failures;
}

std::vector<Cplx> z_panel(int count, double radius) {
  std::mt19937 rng(42);
  const auto uniform = [&] {
    return rng() * (1.0 / 4294967296.0) * 2.0 - 1.0;
  };
  std::vector<Cplx> panel;
  while (static_cast<int>(panel.size()) < count) {
    const Cplx z{radius * uniform(), radius * uniform()};
    if (std::abs(z) <= radius) panel.push_back(z);
  }
  return panel;
}

std::vector<Cplx> sorted_lex(std::vector<Cplx> pts) {
  std::sort(pts.begin(), pts.end(), [](Cplx a, Cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return pts;
}

// --- 1: paper worked examples, exact ---------------------------------------

void criterion_1() {
  bool ok = true;
  // (-x^2+x+1) o (-x^2-x+1) = x^2-x+1
  ok &= hadamard(make_sign_vector(2, 0b100), make_sign_vector(2, 0b110)) ==
        make_sign_vector(2, 0b010);
  // sigma(x^3-x^2-x+1) = {x^3+x^2-x+1, x^3-x^2+x+1}; nu = 2
  const SignVector p = make_sign_vector(3, 0b0110);
  const auto factors = sigma(p);
  ok &= factors.size() == 2 && factors[0] == GeneratorIndex{3, 1} &&
        factors[1] == GeneratorIndex{3, 2};
  ok &= nu(p) == 2;

  const Cplx z0{0.5, 0.5};
  ok &= std::abs(horner_eval(identity(3), z0) - Cplx{1.25, 1.25}) <= 1e-12;
  const auto gens = eval_generators(3, z0).points;
  const Cplx expected[4] = {{-0.75, 1.25}, {0.25, 0.25}, {1.25, 0.25},
                            {1.75, 0.75}};
  for (int j = 0; j < 4; ++j) ok &= std::abs(gens[j] - expected[j]) <= 1e-12;
  ok &= std::abs(eval_via_factorization(p, z0) - Cplx{0.25, -0.75}) <= 1e-12;
  report(1, ok, "worked examples (Hadamard product, sigma, nu, generator "
                "values, factorized evaluation) exact to 1e-12");
}

// --- 2/3: evaluation identity sweeps ---------------------------------------

void criterion_2() {
  const auto panel = z_panel(20, 1.5);
  bool ok = true;
  double worst = 0.0;
  for (int d = 2; d <= 12 && ok; ++d) {
    for (Cplx z : panel) {
      enumerate(d, 0, coefficient_mask(d) + 1, [&](const SignVector& p) {
        const Cplx direct = horner_eval(p, z);
        const double dev = std::abs(eval_via_factorization(p, z) - direct) /
                           (1.0 + std::abs(direct));
        worst = std::max(worst, dev);
      });
    }
  }
  ok &= worst <= 1e-10;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "factorized evaluation sweep d=2..12, 20 z: worst relative "
                "deviation %.3e <= 1e-10",
                worst);
  report(2, ok, buf);
}

void criterion_3() {
  const auto panel = z_panel(20, 1.5);
  double worst = 0.0;
  for (int d = 2; d <= 20; ++d) {
    for (Cplx z : panel) {
      const Cplx direct = horner_eval(identity(d), z);
      worst = std::max(worst,
                       std::abs(eval_identity_via_generators(d, z) - direct) /
                           (1.0 + std::abs(direct)));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "generator-sum identity sweep d=2..20: worst relative "
                "deviation %.3e <= 1e-10",
                worst);
  report(3, worst <= 1e-10, buf);
}

// --- 4: dragon / evaluator cross-oracle ------------------------------------

void criterion_4() {
  const Cplx z{0.48, 0.45};
  const auto dragon = sorted_lex(dragon_set_dedup(z, 14).points);
  const auto evals =
      sorted_lex(eval_all(13, z, Subset::half_constant_positive).points);
  bool ok = dragon.size() == 8192 && evals.size() == 8192;
  double worst = 0.0;
  for (std::size_t i = 0; ok && i < dragon.size(); ++i)
    worst = std::max(worst, std::abs(dragon[i] - evals[i]));
  ok &= worst <= 1e-9;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "dragon_set(0.48+0.45i, 14) matches half-set evaluation: "
                "8192 points, worst pairing gap %.3e <= 1e-9",
                worst);
  report(4, ok, buf);
}

// --- 5: reflection ----------------------------------------------------------

void criterion_5() {
  const Cplx z{0.48, 0.45};
  bool ok = true;
  for (int k : {2, 4, 6, 7}) {
    const auto a = eval_all(14, z, Subset::nu_class, k).points;
    const auto b = eval_all(14, z, Subset::nu_class, 15 - k).points;
    ok &= a.size() == b.size();
    for (std::size_t i = 0; ok && i < a.size(); ++i)
      ok &= a[i] == -b[b.size() - 1 - i];
  }
  report(5, ok, "nu-class(k) equals the exact negation of nu-class(15-k) "
                "for d=14, k in {2,4,6,7}");
}

// --- 6: partition cardinalities ---------------------------------------------

void criterion_6() {
  bool ok = true;
  std::uint64_t count = 0;
  enumerate_nu_class(NuClassDescriptor{14, 7},
                     [&](const SignVector&) { ++count; });
  ok &= count == 6435;
  const auto cost = approx_cost_report(14);
  ok &= cost.full == 32768 && cost.paper_formula == 3432 &&
        cost.corrected == 6435;
  // full/corrected ratio grows with d (non-decreasing stepwise: the even
  // d and the following odd d give exactly equal ratios)
  double first = 0.0, prev = 0.0;
  for (int d = 4; d <= 24; ++d) {
    const auto c = approx_cost_report(d);
    const double ratio =
        static_cast<double>(c.full) / static_cast<double>(c.corrected);
    if (d == 4) first = ratio;
    ok &= ratio >= prev;
    prev = ratio;
  }
  ok &= prev > first;
  report(6, ok, "|N_14(7)| = 6435 by enumeration; cost report {32768, 3432, "
                "6435}; full/corrected ratio non-decreasing and growing "
                "for d=4..24");
}

// --- 7/8: root sweep quality and aggregate symmetry -------------------------

void criteria_7_8() {
  const SolverConfig cfg{};
  std::uint64_t polys = 0, roots = 0, converged = 0;
  bool residual_ok = true, annulus_ok = true, conj_ok = true;
  std::map<std::pair<int, std::uint64_t>, std::vector<Cplx>> small;  // d <= 8

  std::vector<RootRecord> current;
  const auto flush_poly = [&] {
    if (current.empty()) return;
    ++polys;
    for (const auto& r : current) {
      bool found = false;
      for (const auto& s : current)
        if (std::abs(s.root - std::conj(r.root)) <= 1e-7) found = true;
      conj_ok &= found;
    }
    current.clear();
  };

  zero_set(10, cfg, [&](const RootRecord& r) {
    if (!current.empty() && (current.front().degree != r.degree ||
                             current.front().mask != r.mask))
      flush_poly();
    current.push_back(r);
    ++roots;
    if (r.converged) {
      ++converged;
      residual_ok &= r.residual <= 1e-8 * (r.degree + 1);
      const double mod = std::abs(r.root);
      annulus_ok &= mod > 0.5 - 1e-6 && mod < 2.0 + 1e-6;
    }
    if (r.degree <= 8) small[{r.degree, r.mask}].push_back(r.root);
  });
  flush_poly();

  const double rate =
      roots == 0 ? 0.0 : static_cast<double>(converged) / roots;
  bool ok7 = polys == 2046 && roots == 18434 && rate >= 0.999 &&
             residual_ok && annulus_ok && conj_ok;
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "d<=10 sweep: %llu polynomials, %llu roots, convergence "
                "%.4f%%; residual, annulus and conjugation bounds hold",
                static_cast<unsigned long long>(polys),
                static_cast<unsigned long long>(roots), 100.0 * rate);
  report(7, ok7, buf);

  bool ok8 = true;
  for (const auto& [key, rts] : small) {
    const auto [d, mask] = key;
    std::uint64_t rev = 0;
    for (int j = 0; j <= d; ++j)
      if ((mask >> j) & 1) rev |= std::uint64_t{1} << (d - j);
    if ((rev >> d) & 1) rev = negate(SignVector{d, rev}).mask;
    const auto& partner = small.at({d, rev});
    for (Cplx w : rts) {
      const Cplx inv = 1.0 / w;
      bool found = false;
      for (Cplx v : partner)
        if (std::abs(v - inv) <= 1e-6) found = true;
      ok8 &= found;
    }
  }
  report(8, ok8, "inversion closure d<=8: every root has a 1/w counterpart "
                 "in the coefficient-reversed polynomial within 1e-6");
}

// --- 9: epsilon-ball membership ---------------------------------------------

void criterion_9() {
  bool ok = true;
  const Cplx omega{-0.5, std::sqrt(3.0) / 2.0};
  ok &= epsilon_membership(omega, 2, 1e-6, MembershipMode::exact).member;
  for (int d = 1; d <= 14; ++d)
    ok &= !epsilon_membership(Cplx{3, 0}, d, 0.5, MembershipMode::exact)
               .member;
  for (Cplx z : z_panel(10, 1.5)) {
    const auto exact =
        epsilon_membership(z, 12, 1e-6, MembershipMode::exact);
    for (int k : {4, 6, 7}) {
      const auto cls =
          epsilon_membership(z, 12, 1e-6, MembershipMode::nu_class, k);
      ok &= exact.min_modulus <= cls.min_modulus + 1e-12;
    }
  }
  report(9, ok, "membership true at primitive cube root (d=2), false at "
                "z=3 (d<=14); exact minimum <= class minimum on 10-z panel");
}

// --- 10: rendering determinism ----------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(LWZERO_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void criterion_10() {
  const fs::path dir = fs::temp_directory_path();
  const fs::path a = dir / "lw_accept_a.pgm";
  const fs::path b = dir / "lw_accept_b.pgm";
  const fs::path c = dir / "lw_accept_c.pgm";
  const std::string flags = "render --degree-max 12 --width 800 --height 600";
  bool ok = run_cli(flags + " --workers 1 --out " + a.string()) == 0;
  ok &= run_cli(flags + " --workers 1 --out " + b.string()) == 0;
  ok &= run_cli(flags + " --workers 8 --out " + c.string()) == 0;
  const std::string bytes = slurp(a);
  ok &= bytes == slurp(b) && bytes == slurp(c);
  // header "P5\n800 600\n255\n" (15 bytes) + 480000 payload bytes
  const std::string header = "P5\n800 600\n255\n";
  ok &= bytes.size() == header.size() + 800 * 600;
  ok &= bytes.compare(0, header.size(), header) == 0;
  fs::remove(a);
  fs::remove(b);
  fs::remove(c);

  // same pipeline in-process for the histogram-level checks
  const Viewport vp{-2.0, 2.0, -1.5, 1.5};
  DensityGrid grid(800, 600, vp);
  DensityGrid mirrored(800, 600, vp);
  std::uint64_t records = 0;
  zero_set(12, SolverConfig{}, [&](const RootRecord& r) {
    ++records;
    grid.add(r.root);
    mirrored.add(std::conj(r.root));
  });
  ok &= grid.total() + grid.dropped() == records;  // conservation

  // zero density in cells entirely outside the 0.45..2.05 annulus
  const double dx = 4.0 / 800, dy = 3.0 / 600;
  bool annulus_ok = true;
  for (int row = 0; row < 600; ++row) {
    for (int col = 0; col < 800; ++col) {
      if (grid.bin(col, row) == 0) continue;
      const double x0 = vp.xmin + col * dx, x1 = x0 + dx;
      const double y1 = vp.ymax - row * dy, y0 = y1 - dy;
      const double cx = std::clamp(0.0, x0, x1);
      const double cy = std::clamp(0.0, y0, y1);
      const double near2 = cx * cx + cy * cy;  // closest cell point to 0
      double far2 = 0.0;
      for (double x : {x0, x1})
        for (double y : {y0, y1})
          far2 = std::max(far2, x * x + y * y);
      const bool outside = std::sqrt(far2) < 0.45 || std::sqrt(near2) > 2.05;
      annulus_ok &= !outside;
    }
  }
  ok &= annulus_ok;

  // aggregate mirror symmetry: bins of the point set vs bins of its
  // reflection differ by under 1% of the total count
  std::uint64_t diff = 0;
  for (std::size_t i = 0; i < grid.bins().size(); ++i) {
    const std::uint64_t x = grid.bins()[i], y = mirrored.bins()[i];
    diff += x > y ? x - y : y - x;
  }
  ok &= diff <= records / 100;

  char buf[192];
  std::snprintf(buf, sizeof buf,
                "render d<=12 800x600: byte-identical across runs/workers, "
                "%zu bytes, conservation, annulus band, mirror diff %llu",
                bytes.size(), static_cast<unsigned long long>(diff));
  report(10, ok, buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criteria_7_8();
  criterion_9();
  criterion_10();
  std::printf("NOTE  criterion 11: full degree-24 figure excluded by design "
              "(compute budget); `lwzero roots`/`render` accept it behind "
              "--force\n");
  return failures;
}
