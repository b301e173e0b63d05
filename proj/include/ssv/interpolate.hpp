#pragma once

#include "ssv/field.hpp"
#include "ssv/rng.hpp"

namespace ssv {

/// Bilinear interpolation of a 2D snapshot at p. Exact at grid nodes.
/// Points outside the node bounding box are rejected, never extrapolated.
double bilinear_sample(const ScalarFieldSnapshot& snap, Vec2 p);

/// Linear interpolation of a 1D snapshot at x; same contract.
double bilinear_sample(const ScalarFieldSnapshot& snap, double x);

/// Linear interpolation in time between the bracketing snapshots. t must lie
/// within the stored range; the result carries the query time.
ScalarFieldSnapshot temporal_interpolate(const FieldSeries& series, double t);

/// Point lookup in space and time: bilinear in each bracketing snapshot,
/// then linear in t. Cheap per-sample path for batch target generation.
double space_time_sample(const FieldSeries& series, Vec2 p, double t);
double space_time_sample(const FieldSeries& series, double x, double t);

}  // namespace ssv
