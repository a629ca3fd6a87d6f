#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "littlewood/io.hpp"

using namespace littlewood;

namespace {
std::vector<Cplx> random_points(std::size_t n) {
  std::mt19937 rng(11);
  const auto u = [&] { return rng() * (1.0 / 4294967296.0) * 4.0 - 2.0; };
  std::vector<Cplx> pts(n);
  for (Cplx& p : pts) p = Cplx{u(), u()};
  return pts;
}
}  // namespace

TEST_CASE("binary point dump round trip") {
  const auto pts = random_points(257);
  std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
  io::write_points_bin(pts, buf);
  // 4 magic + 4 version + 8 count + 16 per point
  CHECK(buf.str().size() == 16 + 16 * pts.size());
  CHECK(buf.str().substr(0, 4) == "LWZS");
  const auto back = io::read_points_bin(buf);
  CHECK(back == pts);
}

TEST_CASE("bad dumps are rejected") {
  std::stringstream buf;
  buf << "NOPEgarbage";
  CHECK_THROWS_AS(io::read_points_bin(buf), std::runtime_error);
}

TEST_CASE("csv round trips through strtod") {
  const auto pts = random_points(64);
  std::ostringstream sink;
  io::write_points_csv(pts, sink);
  std::istringstream source(sink.str());
  std::string line;
  std::getline(source, line);
  CHECK(line == "re,im");
  for (Cplx expect : pts) {
    REQUIRE(std::getline(source, line));
    char* end = nullptr;
    const double re = std::strtod(line.c_str(), &end);
    REQUIRE(*end == ',');
    const double im = std::strtod(end + 1, &end);
    CHECK(Cplx{re, im} == expect);  // shortest form is exact
  }
}

TEST_CASE("root record csv line") {
  std::ostringstream sink;
  io::write_roots_csv_header(sink);
  io::write_root_csv(RootRecord{Cplx{1, 0}, 5, 3, 0.0, true}, sink);
  CHECK(sink.str() == "degree,mask,re,im,residual,converged\n3,5,1,0,0,1\n");
}
