#pragma once

#include <optional>

#include "cgacol/point.hpp"

namespace cgacol {

/// A segment whose squared length is below this (mm^2) is treated as a point.
inline constexpr double kDegenerateLength2 = 1e-12;

/// Closed ball: every point within `radius` of `center`, boundary included.
struct ClosedBall {
  EuclideanPoint center;
  double radius = 0.0;

  /// Throws ValidationError for a non-finite center or a negative radius.
  ClosedBall(const EuclideanPoint& c, double r);

  friend bool operator==(const ClosedBall&, const ClosedBall&) = default;
};

/// Center line q(t) = start + t (end - start), t in [0, 1].
/// Coincident endpoints are allowed; the segment is then a single point.
struct Segment {
  EuclideanPoint start;
  EuclideanPoint end;

  Segment(const EuclideanPoint& s, const EuclideanPoint& e);

  EuclideanPoint direction() const { return end - start; }
  double length2() const { return norm2(end - start); }
  bool is_degenerate() const { return length2() < kDegenerateLength2; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Union of equal-radius closed balls centered along an axis segment.
struct Capsule {
  Segment axis;
  double radius = 0.0;

  Capsule(const Segment& a, double r);
  Capsule(const EuclideanPoint& start, const EuclideanPoint& end, double r)
      : Capsule(Segment{start, end}, r) {}

  friend bool operator==(const Capsule&, const Capsule&) = default;
};

/// Membership in a closed ball: the conformal test P(x) . S(b) >= 0, evaluated
/// through its Euclidean reduction r^2 - |x - c|^2 >= 0.
bool ball_contains(const ClosedBall& b, const EuclideanPoint& x);

/// Point on the segment at parameter t; t outside [0, 1] is rejected.
EuclideanPoint segment_point_at(const Segment& s, double t);

/// Membership in a capsule: squared distance from x to the axis <= r^2.
bool capsule_contains(const Capsule& c, const EuclideanPoint& x);

/// A capsule whose axis collapses to a point is exactly the ball at that point.
std::optional<ClosedBall> capsule_degenerate_as_ball(const Capsule& c);

}  // namespace cgacol
