#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "littlewood/roots.hpp"
#include "test_util.hpp"

using namespace littlewood;

namespace {
const SolverConfig kCfg{};
}

TEST_CASE("cyclotomic 1 + z + z^2") {
  const auto records = roots_of(identity(2), kCfg);
  REQUIRE(records.size() == 2);
  const Cplx omega{-0.5, std::sqrt(3.0) / 2.0};
  // sorted by (re, im): conjugate first
  CHECK(std::abs(records[0].root - std::conj(omega)) < 1e-10);
  CHECK(std::abs(records[1].root - omega) < 1e-10);
  for (const auto& r : records) {
    CHECK(r.converged);
    CHECK(r.residual < 1e-12);
  }
}

TEST_CASE("linear polynomials") {
  const auto minus = roots_of(make_sign_vector(1, 0b01), kCfg);  // z - 1
  REQUIRE(minus.size() == 1);
  CHECK(minus[0].root == Cplx{1, 0});
  const auto plus = roots_of(identity(1), kCfg);  // z + 1
  REQUIRE(plus.size() == 1);
  CHECK(plus[0].root == Cplx{-1, 0});
}

TEST_CASE("multiple root (z - 1)^2 (z + 1)") {
  const auto records = roots_of(make_sign_vector(3, 0b0110), kCfg);
  REQUIRE(records.size() == 3);
  CHECK(std::abs(records[0].root - Cplx{-1, 0}) < 1e-6);
  CHECK(std::abs(records[1].root - Cplx{1, 0}) < 1e-6);
  CHECK(std::abs(records[2].root - Cplx{1, 0}) < 1e-6);
  for (const auto& r : records) {
    CHECK(r.converged);
    CHECK(r.residual <= 1e-8 * 4);
  }
}

TEST_CASE("solver config validation") {
  CHECK_THROWS_AS(roots_of(identity(3), SolverConfig{-1.0, 10, true}),
                  std::invalid_argument);
  CHECK_THROWS_AS(roots_of(identity(3), SolverConfig{1e-12, 0, true}),
                  std::invalid_argument);
}

TEST_CASE("sweep quality, d <= 8") {
  std::uint64_t total = 0, converged = 0;
  for (int d = 1; d <= 8; ++d) {
    const double residual_bound = 1e-8 * (d + 1);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
      const auto records = roots_of(SignVector{d, m}, kCfg);
      REQUIRE(records.size() == static_cast<std::size_t>(d));
      for (const auto& r : records) {
        ++total;
        if (!r.converged) continue;
        ++converged;
        CHECK(r.residual <= residual_bound);
        const double mod = std::abs(r.root);
        CHECK(mod > 0.5 - 1e-6);
        CHECK(mod < 2.0 + 1e-6);
      }
      // conjugation closure is exact after symmetrization
      for (const auto& r : records) {
        bool found = false;
        for (const auto& s : records)
          if (s.root == std::conj(r.root)) found = true;
        CHECK(found);
      }
    }
  }
  CHECK(converged == total);  // d <= 8 should be fully convergent
}

TEST_CASE("zero_set ordering and counts") {
  std::vector<RootRecord> records;
  zero_set(4, kCfg, [&](const RootRecord& r) { records.push_back(r); });
  // sum over d of d * 2^d
  CHECK(records.size() == 2 + 8 + 24 + 64);
  // canonical (degree, mask) order, leading coefficient always +1
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& a = records[i - 1];
    const auto& b = records[i];
    CHECK((a.degree < b.degree ||
           (a.degree == b.degree && a.mask <= b.mask)));
    CHECK(b.mask < (std::uint64_t{1} << b.degree));
  }

  std::vector<RootRecord> tiny;
  zero_set(1, kCfg, [&](const RootRecord& r) { tiny.push_back(r); });
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0].root == Cplx{-1, 0});  // 1 + z
  CHECK(tiny[1].root == Cplx{1, 0});   // -1 + z
}

TEST_CASE("zero_set is worker independent") {
  std::vector<RootRecord> one, four;
  zero_set(6, kCfg, [&](const RootRecord& r) { one.push_back(r); }, 1);
  zero_set(6, kCfg, [&](const RootRecord& r) { four.push_back(r); }, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].root == four[i].root);
    CHECK(one[i].mask == four[i].mask);
  }
}

TEST_CASE("inversion closure, d <= 6") {
  for (int d = 2; d <= 6; ++d) {
    std::map<std::uint64_t, std::vector<Cplx>> by_mask;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
      for (const auto& r : roots_of(SignVector{d, m}, kCfg))
        by_mask[m].push_back(r.root);

    for (const auto& [mask, roots] : by_mask) {
      // reciprocal polynomial: coefficient vector reversed, canonicalized
      // to leading +1 (p and -p share roots)
      std::uint64_t rev = 0;
      for (int j = 0; j <= d; ++j)
        if ((mask >> j) & 1) rev |= std::uint64_t{1} << (d - j);
      if ((rev >> d) & 1) rev = negate(SignVector{d, rev}).mask;
      REQUIRE(by_mask.count(rev) == 1);
      for (Cplx w : roots) {
        const Cplx inv = 1.0 / w;
        bool found = false;
        for (Cplx v : by_mask[rev])
          if (std::abs(v - inv) < 1e-6) found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("epsilon membership") {
  const Cplx omega{-0.5, std::sqrt(3.0) / 2.0};
  const auto hit = epsilon_membership(omega, 2, 1e-6, MembershipMode::exact);
  CHECK(hit.member);
  CHECK(hit.min_modulus <= 1e-12);
  CHECK(hit.evaluations_used == 4);  // 2^2

  // z = 1 kills any balanced sign pattern when d+1 is even
  const auto at_one =
      epsilon_membership(Cplx{1, 0}, 3, 1e-9, MembershipMode::exact);
  CHECK(at_one.member);

  const auto miss =
      epsilon_membership(Cplx{3, 0}, 14, 0.5, MembershipMode::exact);
  CHECK(!miss.member);
  CHECK(miss.evaluations_used == 16384);

  CHECK_THROWS_AS(epsilon_membership(omega, 2, 0.0, MembershipMode::exact),
                  std::invalid_argument);
}

TEST_CASE("class-mode minimum dominates the exact minimum") {
  const int d = 10;
  for (Cplx z : lwtest::z_panel(10)) {
    const auto exact = epsilon_membership(z, d, 1e-6, MembershipMode::exact);
    for (int k : {3, 5, 6}) {
      const auto cls =
          epsilon_membership(z, d, 1e-6, MembershipMode::nu_class, k);
      CHECK(exact.min_modulus <= cls.min_modulus + 1e-12);
      CHECK(cls.evaluations_used == nu_class_size(d, k));
    }
  }
}

TEST_CASE("approximation cost report") {
  const auto r14 = approx_cost_report(14);
  CHECK(r14.full == 32768);
  CHECK(r14.paper_formula == 3432);
  CHECK(r14.corrected == 6435);
  const auto r2 = approx_cost_report(2);
  CHECK(r2.full == 8);
  CHECK(r2.paper_formula == 2);
  CHECK(r2.corrected == 3);
  CHECK(approx_cost_report(1).full == 4);
}
