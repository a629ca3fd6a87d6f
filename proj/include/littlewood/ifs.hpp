#pragma once

#include <vector>

#include "littlewood/eval.hpp"

namespace littlewood {

/// Affine complex map x |-> scale * x + offset.
struct AffineMap {
  Cplx scale{};
  Cplx offset{};

  Cplx operator()(Cplx x) const { return scale * x + offset; }
  bool contractive() const { return std::abs(scale) < 1.0; }
  Cplx fixed_point() const { return offset / (1.0 - scale); }
};

/// One iteration layer's worth of points; |points| = m^depth * |seed| for
/// an m-map system. Order is lexicographic in the branch word (outermost
/// layer's map index is most significant).
struct OrbitSet {
  int depth = 0;
  std::vector<Cplx> points;
};

/// The two-map system f+(x) = 1 + z x, f-(x) = 1 - z x, in that order.
/// Contractive iff |z| < 1; larger parameters are allowed at finite depth.
std::vector<AffineMap> littlewood_ifs(Cplx z);

/// Sierpinski triangle maps: x/2, x/2 + 1/2, x/2 + (1/4 + (sqrt(3)/4) i).
std::vector<AffineMap> sierpinski_ifs();

/// Applies one full map layer n times: S_{k+1} = union over maps of
/// f_j(S_k), kept as a multiset. Depth 0 returns the seed.
OrbitSet iterate_system(const std::vector<AffineMap>& maps,
                        std::vector<Cplx> seed, int n);

/// iterate(littlewood_ifs(z), {0}, n). The multiset equals
/// { p(z) : p in L_{n-1}, constant term +1 }, each value twice.
OrbitSet dragon_set(Cplx z, int n);

/// One depth-1 branch of dragon_set (the two coincide): 2^{n-1} points.
OrbitSet dragon_set_dedup(Cplx z, int n);

}  // namespace littlewood
