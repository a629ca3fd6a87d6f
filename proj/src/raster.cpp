#include "littlewood/raster.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace littlewood {

DensityGrid::DensityGrid(int width, int height, Viewport vp)
    : width_(width), height_(height), vp_(vp) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("grid dimensions must be positive");
  if (!(vp.xmin < vp.xmax) || !(vp.ymin < vp.ymax))
    throw std::invalid_argument("degenerate viewport");
  bins_.assign(static_cast<std::size_t>(width) * height, 0);
}

std::uint64_t DensityGrid::total() const {
  return std::accumulate(bins_.begin(), bins_.end(), std::uint64_t{0});
}

void DensityGrid::add(Cplx point) {
  const double re = point.real(), im = point.imag();
  if (re < vp_.xmin || re > vp_.xmax || im < vp_.ymin || im > vp_.ymax) {
    ++dropped_;
    return;
  }
  const double dx = (vp_.xmax - vp_.xmin) / width_;
  const double dy = (vp_.ymax - vp_.ymin) / height_;
  int col = static_cast<int>(std::floor((re - vp_.xmin) / dx));
  int row = static_cast<int>(std::floor((vp_.ymax - im) / dy));
  if (col >= width_) col = width_ - 1;    // re == xmax
  if (row >= height_) row = height_ - 1;  // im == ymin
  ++bins_[static_cast<std::size_t>(row) * width_ + col];
}

void DensityGrid::accumulate(std::span<const Cplx> points) {
  for (Cplx p : points) add(p);
}

void DensityGrid::merge(const DensityGrid& other) {
  if (other.width_ != width_ || other.height_ != height_ || other.vp_ != vp_)
    throw std::invalid_argument("merge: grid geometry mismatch");
  for (std::size_t i = 0; i < bins_.size(); ++i) bins_[i] += other.bins_[i];
  dropped_ += other.dropped_;
}

ImageBuffer to_image(const DensityGrid& grid, ColorMap map) {
  ImageBuffer img{grid.width(), grid.height(), {}};
  img.pixels.assign(grid.bins().size(), 0);
  std::uint64_t cmax = 0;
  for (std::uint64_t c : grid.bins()) cmax = std::max(cmax, c);
  if (cmax == 0) return img;
  const double denom = map == ColorMap::log
                           ? std::log1p(static_cast<double>(cmax))
                           : static_cast<double>(cmax);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const double c = static_cast<double>(grid.bins()[i]);
    const double v = map == ColorMap::log ? std::log1p(c) : c;
    img.pixels[i] = static_cast<std::uint8_t>(std::lround(255.0 * v / denom));
  }
  return img;
}

std::size_t write_pgm(const ImageBuffer& img, std::ostream& sink) {
  const std::string header = "P5\n" + std::to_string(img.width) + " " +
                             std::to_string(img.height) + "\n255\n";
  sink.write(header.data(), static_cast<std::streamsize>(header.size()));
  sink.write(reinterpret_cast<const char*>(img.pixels.data()),
             static_cast<std::streamsize>(img.pixels.size()));
  if (!sink) throw std::runtime_error("write_pgm: sink write failure");
  return header.size() + img.pixels.size();
}

void write_grid_csv(const DensityGrid& grid, std::ostream& sink) {
  sink << "col,row,count\n";
  for (int row = 0; row < grid.height(); ++row)
    for (int col = 0; col < grid.width(); ++col)
      if (const std::uint64_t c = grid.bin(col, row))
        sink << col << ',' << row << ',' << c << '\n';
}

}  // namespace littlewood
