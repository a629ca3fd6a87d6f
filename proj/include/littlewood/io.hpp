#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "littlewood/roots.hpp"

namespace littlewood::io {

/// `re,im` per line, shortest round-trip formatting.
void write_points_csv(std::span<const Cplx> points, std::ostream& sink);

/// Point dump: magic "LWZS", u32 version 1, u64 count, then count
/// little-endian (re, im) float64 pairs.
void write_points_bin(std::span<const Cplx> points, std::ostream& sink);

std::vector<Cplx> read_points_bin(std::istream& source);

/// `degree,mask,re,im,residual,converged` per record, with header line.
void write_roots_csv_header(std::ostream& sink);
void write_root_csv(const RootRecord& rec, std::ostream& sink);

void write_root_bin_header(std::uint64_t count, std::ostream& sink);
void write_root_bin_point(const RootRecord& rec, std::ostream& sink);

std::string format_complex(Cplx z);

}  // namespace littlewood::io
