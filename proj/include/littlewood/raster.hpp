#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "littlewood/eval.hpp"

namespace littlewood {

struct Viewport {
  double xmin = -2.0, xmax = 2.0;
  double ymin = -1.5, ymax = 1.5;

  friend bool operator==(const Viewport&, const Viewport&) = default;
};

/// 2D histogram over a complex-plane viewport. Cells are half-open,
/// closed at the low-x / high-y edge; the xmax / ymin boundaries fall in
/// the last cells. Top row holds the largest imaginary parts.
class DensityGrid {
 public:
  DensityGrid(int width, int height, Viewport vp);

  int width() const { return width_; }
  int height() const { return height_; }
  const Viewport& viewport() const { return vp_; }
  std::uint64_t bin(int col, int row) const {
    return bins_[static_cast<std::size_t>(row) * width_ + col];
  }
  const std::vector<std::uint64_t>& bins() const { return bins_; }
  std::uint64_t dropped() const { return dropped_; }
  std::uint64_t total() const;

  void add(Cplx point);
  void accumulate(std::span<const Cplx> points);
  void merge(const DensityGrid& other);

 private:
  int width_;
  int height_;
  Viewport vp_;
  std::vector<std::uint64_t> bins_;
  std::uint64_t dropped_ = 0;
};

enum class ColorMap { linear, log };

struct ImageBuffer {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major grayscale
};

/// log: round(255 ln(1+c)/ln(1+cmax)); linear: round(255 c/cmax).
/// An empty grid renders all-zero.
ImageBuffer to_image(const DensityGrid& grid, ColorMap map);

/// Binary PGM (P5), top row first. Returns bytes written.
std::size_t write_pgm(const ImageBuffer& img, std::ostream& sink);

/// Debug dump: one `col,row,count` line per nonzero bin.
void write_grid_csv(const DensityGrid& grid, std::ostream& sink);

}  // namespace littlewood
