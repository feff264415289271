#include "cgacol/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cgacol/error.hpp"

namespace cgacol::oracle {

namespace {

struct Vec {
  double x, y, z;
};

Vec to_vec(const EuclideanPoint& p) { return {p.x, p.y, p.z}; }
Vec minus(const Vec& a, const Vec& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec lerp(const Vec& s, const Vec& e, double t) {
  return {s.x + t * (e.x - s.x), s.y + t * (e.y - s.y), s.z + t * (e.z - s.z)};
}
double inner3(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double dist2(const Vec& a, const Vec& b) {
  const Vec d = minus(a, b);
  return inner3(d, d);
}

void check(GridSpec g) {
  if (g.resolution < 2) throw ValidationError("grid resolution must be >= 2");
}

std::vector<Vec> samples(const Segment& seg, std::size_t n) {
  std::vector<Vec> pts(n + 1);
  const Vec s = to_vec(seg.start);
  const Vec e = to_vec(seg.end);
  for (std::size_t k = 0; k <= n; ++k) {
    pts[k] = lerp(s, e, static_cast<double>(k) / static_cast<double>(n));
  }
  pts[n] = e;
  return pts;
}

double project_clamped(const Vec& p, const Vec& s, const Vec& e) {
  const Vec d = minus(e, s);
  const double dd = inner3(d, d);
  double t = 0.0;
  if (dd > 0.0) t = std::clamp(inner3(minus(p, s), d) / dd, 0.0, 1.0);
  return dist2(p, lerp(s, e, t));
}

}  // namespace

double oracle_point_segment(const EuclideanPoint& p, const Segment& seg, GridSpec grid) {
  check(grid);
  const Vec pv = to_vec(p);
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& q : samples(seg, grid.resolution)) best = std::min(best, dist2(pv, q));
  return best;
}

double oracle_segment_segment(const Segment& seg1, const Segment& seg2, GridSpec grid) {
  check(grid);
  const std::vector<Vec> a = samples(seg1, grid.resolution);
  const std::vector<Vec> b = samples(seg2, grid.resolution);
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& p : a) {
    for (const Vec& q : b) best = std::min(best, dist2(p, q));
  }
  return best;
}

double grid_slack(double length, double true_distance, GridSpec grid) {
  const double step = length / static_cast<double>(grid.resolution);
  return step * (2.0 * true_distance + step);
}

double reference_point_segment2(const EuclideanPoint& p, const Segment& seg) {
  return project_clamped(to_vec(p), to_vec(seg.start), to_vec(seg.end));
}

double reference_segment_segment2(const Segment& seg1, const Segment& seg2) {
  const Vec p1 = to_vec(seg1.start), q1 = to_vec(seg1.end);
  const Vec p2 = to_vec(seg2.start), q2 = to_vec(seg2.end);

  double best = std::min({project_clamped(p1, p2, q2), project_clamped(q1, p2, q2),
                          project_clamped(p2, p1, q1), project_clamped(q2, p1, q1)});

  // Interior critical point of |(p1 + s d1) - (p2 + t d2)|^2. Any candidate
  // is a realizable pair, so an ill-conditioned solve can only lose, not
  // undercut, the true minimum.
  const Vec d1 = minus(q1, p1), d2 = minus(q2, p2), r = minus(p1, p2);
  const double aa = inner3(d1, d1), ee = inner3(d2, d2);
  const double bb = inner3(d1, d2), cc = inner3(d1, r), ff = inner3(d2, r);
  const double denom = aa * ee - bb * bb;
  if (aa > 0.0 && ee > 0.0 && denom > 0.0) {
    const double s = (bb * ff - cc * ee) / denom;
    const double t = (aa * ff - bb * cc) / denom;
    if (s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0) {
      best = std::min(best, dist2(lerp(p1, q1, s), lerp(p2, q2, t)));
    }
  }
  return best;
}

double euclid_reference_distance2(const Component& a, const Component& b) {
  const auto* ba = std::get_if<ClosedBall>(&a);
  const auto* bb = std::get_if<ClosedBall>(&b);
  if (ba && bb) return dist2(to_vec(ba->center), to_vec(bb->center));
  if (ba) return reference_point_segment2(ba->center, std::get<Capsule>(b).axis);
  if (bb) return reference_point_segment2(bb->center, std::get<Capsule>(a).axis);
  return reference_segment_segment2(std::get<Capsule>(a).axis, std::get<Capsule>(b).axis);
}

}  // namespace cgacol::oracle
