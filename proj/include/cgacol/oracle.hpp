#pragma once

// Brute-force and reference distances for checking the distance module.
// Nothing here calls into distance.hpp or the multivector algebra.

#include <cstddef>

#include "cgacol/collision.hpp"
#include "cgacol/point.hpp"
#include "cgacol/primitives.hpp"

namespace cgacol::oracle {

/// Samples per parameter axis; the grid has resolution + 1 nodes, 0..1.
struct GridSpec {
  std::size_t resolution = 2000;

  static GridSpec line() { return {2000}; }
  static GridSpec square() { return {600}; }
};

/// Minimum of |p - q(t)|^2 over t in {0, 1/N, ..., 1}. Throws
/// ValidationError for N < 2.
double oracle_point_segment(const EuclideanPoint& p, const Segment& seg,
                            GridSpec grid = GridSpec::line());

/// Minimum over the (N+1) x (N+1) parameter grid.
double oracle_segment_segment(const Segment& seg1, const Segment& seg2,
                              GridSpec grid = GridSpec::square());

/// Upper slack of a grid minimum above the true squared distance D^2 for a
/// path of length `length`: (L/N)(2D + L/N).
double grid_slack(double length, double true_distance, GridSpec grid);

/// Point-segment squared distance by clamped projection.
double reference_point_segment2(const EuclideanPoint& p, const Segment& seg);

/// Segment-segment squared distance: the minimum over the four endpoint
/// projections and, when it lies in the unit square, the interior solution
/// of the 2x2 normal equations.
double reference_segment_segment2(const Segment& seg1, const Segment& seg2);

/// Squared distance between the center sets of two components.
double euclid_reference_distance2(const Component& a, const Component& b);

}  // namespace cgacol::oracle
