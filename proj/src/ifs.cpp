#include "littlewood/ifs.hpp"

#include <cmath>
#include <stdexcept>

namespace littlewood {

std::vector<AffineMap> littlewood_ifs(Cplx z) {
  check_finite(z);
  return {AffineMap{z, Cplx{1.0, 0.0}}, AffineMap{-z, Cplx{1.0, 0.0}}};
}

std::vector<AffineMap> sierpinski_ifs() {
  const double s3_4 = std::sqrt(3.0) / 4.0;
  return {AffineMap{0.5, 0.0},
          AffineMap{0.5, 0.5},
          AffineMap{0.5, Cplx{0.25, s3_4}}};
}

OrbitSet iterate_system(const std::vector<AffineMap>& maps,
                        std::vector<Cplx> seed, int n) {
  if (n < 0) throw std::invalid_argument("iterate: negative depth");
  if (maps.empty()) throw std::invalid_argument("iterate: no maps");
  double projected = static_cast<double>(seed.size());
  for (int i = 0; i < n; ++i) projected *= static_cast<double>(maps.size());
  if (projected > static_cast<double>(kPointBudget))
    throw std::length_error("iterate: orbit exceeds point budget");

  std::vector<Cplx> cur = std::move(seed);
  for (int layer = 0; layer < n; ++layer) {
    std::vector<Cplx> next;
    next.reserve(cur.size() * maps.size());
    for (const AffineMap& f : maps)
      for (Cplx x : cur) next.push_back(f(x));
    cur = std::move(next);
  }
  return OrbitSet{n, std::move(cur)};
}

OrbitSet dragon_set(Cplx z, int n) {
  if (n < 1) throw std::invalid_argument("dragon_set: depth must be >= 1");
  return iterate_system(littlewood_ifs(z), {Cplx{0.0, 0.0}}, n);
}

OrbitSet dragon_set_dedup(Cplx z, int n) {
  if (n < 1) throw std::invalid_argument("dragon_set: depth must be >= 1");
  // Both depth-1 branches send 0 to 1, so the two subtrees coincide; keep
  // one by seeding at 1 and iterating n-1 more layers.
  OrbitSet orbit = iterate_system(littlewood_ifs(z), {Cplx{1.0, 0.0}}, n - 1);
  orbit.depth = n;
  return orbit;
}

}  // namespace littlewood
