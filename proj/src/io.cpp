#include "littlewood/io.hpp"

#include <array>
#include <charconv>
#include <cstring>
#include <stdexcept>

namespace littlewood::io {

namespace {

constexpr char kMagic[4] = {'L', 'W', 'Z', 'S'};
constexpr std::uint32_t kVersion = 1;

void put_f64(double v, std::ostream& sink) {
  // Host is little-endian on every supported target; emit raw bytes.
  static_assert(sizeof(double) == 8);
  char buf[8];
  std::memcpy(buf, &v, 8);
  sink.write(buf, 8);
}

void append_double(std::string& out, double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), res.ptr);
}

}  // namespace

std::string format_complex(Cplx z) {
  std::string out;
  append_double(out, z.real());
  out.push_back(',');
  append_double(out, z.imag());
  return out;
}

void write_points_csv(std::span<const Cplx> points, std::ostream& sink) {
  sink << "re,im\n";
  std::string line;
  for (Cplx p : points) {
    line.clear();
    line = format_complex(p);
    line.push_back('\n');
    sink.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  if (!sink) throw std::runtime_error("csv write failure");
}

void write_points_bin(std::span<const Cplx> points, std::ostream& sink) {
  sink.write(kMagic, 4);
  std::uint32_t version = kVersion;
  char buf[8];
  std::memcpy(buf, &version, 4);
  sink.write(buf, 4);
  std::uint64_t count = points.size();
  std::memcpy(buf, &count, 8);
  sink.write(buf, 8);
  for (Cplx p : points) {
    put_f64(p.real(), sink);
    put_f64(p.imag(), sink);
  }
  if (!sink) throw std::runtime_error("binary write failure");
}

std::vector<Cplx> read_points_bin(std::istream& source) {
  char magic[4];
  source.read(magic, 4);
  if (!source || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("bad point dump magic");
  std::uint32_t version = 0;
  source.read(reinterpret_cast<char*>(&version), 4);
  if (version != kVersion) throw std::runtime_error("bad point dump version");
  std::uint64_t count = 0;
  source.read(reinterpret_cast<char*>(&count), 8);
  std::vector<Cplx> points(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    double re, im;
    source.read(reinterpret_cast<char*>(&re), 8);
    source.read(reinterpret_cast<char*>(&im), 8);
    points[i] = Cplx{re, im};
  }
  if (!source) throw std::runtime_error("truncated point dump");
  return points;
}

void write_roots_csv_header(std::ostream& sink) {
  sink << "degree,mask,re,im,residual,converged\n";
}

void write_root_csv(const RootRecord& rec, std::ostream& sink) {
  std::string line = std::to_string(rec.degree);
  line.push_back(',');
  line += std::to_string(rec.mask);
  line.push_back(',');
  line += format_complex(rec.root);
  line.push_back(',');
  append_double(line, rec.residual);
  line.push_back(',');
  line += rec.converged ? '1' : '0';
  line.push_back('\n');
  sink.write(line.data(), static_cast<std::streamsize>(line.size()));
}

void write_root_bin_header(std::uint64_t count, std::ostream& sink) {
  sink.write(kMagic, 4);
  std::uint32_t version = kVersion;
  char buf[8];
  std::memcpy(buf, &version, 4);
  sink.write(buf, 4);
  std::memcpy(buf, &count, 8);
  sink.write(buf, 8);
}

void write_root_bin_point(const RootRecord& rec, std::ostream& sink) {
  put_f64(rec.root.real(), sink);
  put_f64(rec.root.imag(), sink);
}

}  // namespace littlewood::io
