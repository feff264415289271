#pragma once

// Shortest distances between the centers of collision primitives.
//
// Every function here returns a SQUARED Euclidean distance (mm^2). For
// conformal points P, Q the inner product satisfies P . Q = -|p - q|^2 / 2,
// so 2 |P . Q| is the squared distance, and collision thresholds compare it
// against (r1 + r2)^2. Use SquaredDistance::distance() for the plain length.

#include <cmath>

#include "cgacol/point.hpp"
#include "cgacol/primitives.hpp"

namespace cgacol {

struct SquaredDistance {
  double value = 0.0;

  double distance() const { return std::sqrt(value); }
};

/// Which branch of the case analysis produced a result.
enum class DistanceBranch {
  PointPoint,        // both arguments are points
  SegmentStart,      // projection falls before the start, s = 0
  SegmentEnd,        // projection falls past the end, s = 1
  SegmentInterior,   // projection lies strictly inside the segment
  FirstDegenerate,   // seg1 is a point, reduced to point-segment
  SecondDegenerate,  // seg2 is a point, reduced to point-segment
  Stationary,        // interior stationary point of the pair quadratic
  Boundary,          // stationary point outside the unit square
  Parallel,          // axes parallel, no unique stationary point
};

/// Closest points realizing a center distance. For point-segment queries
/// `s1` is 0 and `s2` is the parameter on the segment.
struct ClosestPair {
  SquaredDistance squared_distance;
  double s1 = 0.0;
  double s2 = 0.0;
  EuclideanPoint first;
  EuclideanPoint second;
  DistanceBranch branch = DistanceBranch::PointPoint;
};

/// Ball-ball center distance |p1 - p2|^2. Evaluated through the Euclidean
/// reduction of 2 |P1 . P2|, which avoids the cancellation the conformal
/// coordinates suffer for nearby points far from the origin.
SquaredDistance center_dist_fa(const EuclideanPoint& p1, const EuclideanPoint& p2);

/// 2 |scalar_part(P1 . P2)| computed literally with multivectors.
double center_dist_fa_cga(const EuclideanPoint& p1, const EuclideanPoint& p2);

/// Point-segment center distance, min over t in [0,1] of |p - q(t)|^2.
///   segment is a point           -> fa(p, start)
///   (p - sc).(ec - sc) <= 0      -> fa(p, start),  s = 0
///   |ec - sc|^2 <= (p-sc).(ec-sc) -> fa(p, end),   s = 1
///   otherwise                    -> projection, s = (p-sc).(ec-sc) / |ec-sc|^2
ClosestPair center_dist_fb(const EuclideanPoint& p, const Segment& seg);

/// Coefficients of Q(s1, s2) = |w + s1 u - s2 v|^2 for two segments, with
/// u = ec1 - sc1, v = ec2 - sc2, w = sc1 - sc2 and
///   a = u.u, b = -(u.v), c = v.v, d = u.w, e = -(v.w), f = w.w,
/// so that Q = a s1^2 + 2b s1 s2 + c s2^2 + 2d s1 + 2e s2 + f.
struct SegmentPairCoefficients {
  EuclideanPoint u, v, w;
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  double quadratic(double s1, double s2) const;
  /// dQ/ds1, dQ/ds2.
  std::pair<double, double> gradient(double s1, double s2) const;
  /// a c - b^2, the determinant of the quadratic part.
  double determinant() const { return a * c - b * b; }
};

SegmentPairCoefficients segment_pair_coefficients(const Segment& seg1, const Segment& seg2);

/// Unconstrained minimizer of Q:
///   s1k = (b e - c d) / (a c - b^2),  s2k = (b d - a e) / (a c - b^2).
/// `exists` is false when |a c - b^2| <= 1e-10 max(a c, 1) (parallel axes).
struct StationaryPoint {
  bool exists = false;
  double s1k = 0.0;
  double s2k = 0.0;
};

StationaryPoint stationary_point(const SegmentPairCoefficients& co);

/// True when the axes count as parallel for the stationary-point test.
bool is_parallel(const SegmentPairCoefficients& co);

/// Case label of a segment pair, as used by center_dist_fc. Conditions that
/// overlap (e.g. s1k < 0 and s2k > 1) report the first in this order.
enum class SegmentPairCase {
  BothDegenerate,
  FirstDegenerate,   // seg1 is a point
  SecondDegenerate,  // seg2 is a point
  Stationary,        // stationary point inside [0,1]^2
  S1BelowZero,
  S1AboveOne,
  S2BelowZero,
  S2AboveOne,
  Parallel,
};

SegmentPairCase classify_segment_pair(const Segment& seg1, const Segment& seg2);

/// Segment-segment center distance, inf over [0,1]^2 of |q1(s1) - q2(s2)|^2.
/// Degenerate axes reduce to fb/fa; otherwise the interior stationary point
/// is used when it lies in the unit square, and the four edge restrictions
/// s1 = 0, s1 = 1, s2 = 0, s2 = 1 (each a point-segment problem) otherwise.
/// Ties on the edges resolve to the lexicographically smallest (s1, s2).
ClosestPair center_dist_fc(const Segment& seg1, const Segment& seg2);

}  // namespace cgacol
