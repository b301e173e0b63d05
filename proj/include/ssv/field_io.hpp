#pragma once

#include <string>

#include "ssv/field.hpp"

namespace ssv {

/// SSF1 field file, bit-exact little-endian layout:
///   "SSF1"
///   u8  dimensionality (1 or 2)
///   u32 n (nodes per axis)
///   f64 geometry: x_min, x_max (1D) or L (2D)
///   u32 snapshot count
///   per snapshot: f64 time, then row-major f64 values
void write_ssf1(const std::string& path, const FieldSeries& series);

FieldSeries read_ssf1(const std::string& path);

}  // namespace ssv
