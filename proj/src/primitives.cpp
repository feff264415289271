#include "cgacol/primitives.hpp"

#include <cmath>

#include "cgacol/distance.hpp"
#include "cgacol/error.hpp"

namespace cgacol {

namespace {

void check_radius(double r, const char* what) {
  if (!std::isfinite(r)) throw ValidationError(std::string(what) + ": non-finite radius");
  if (r < 0.0) throw ValidationError(std::string(what) + ": negative radius");
}

}  // namespace

ClosedBall::ClosedBall(const EuclideanPoint& c, double r) : center(c), radius(r) {
  if (!c.is_finite()) throw ValidationError("ball: non-finite center");
  check_radius(r, "ball");
}

Segment::Segment(const EuclideanPoint& s, const EuclideanPoint& e) : start(s), end(e) {
  if (!s.is_finite() || !e.is_finite()) throw ValidationError("segment: non-finite endpoint");
}

Capsule::Capsule(const Segment& a, double r) : axis(a), radius(r) { check_radius(r, "capsule"); }

bool ball_contains(const ClosedBall& b, const EuclideanPoint& x) {
  return b.radius * b.radius - norm2(x - b.center) >= 0.0;
}

EuclideanPoint segment_point_at(const Segment& s, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("segment parameter outside [0, 1]");
  if (t == 1.0) return s.end;
  return s.start + t * s.direction();
}

bool capsule_contains(const Capsule& c, const EuclideanPoint& x) {
  return center_dist_fb(x, c.axis).squared_distance.value <= c.radius * c.radius;
}

std::optional<ClosedBall> capsule_degenerate_as_ball(const Capsule& c) {
  if (!c.axis.is_degenerate()) return std::nullopt;
  return ClosedBall{c.axis.start, c.radius};
}

}  // namespace cgacol
