#include "cgacol/distance.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cgacol/conformal.hpp"

namespace cgacol {

namespace {

constexpr double kParallelRelEps = 1e-10;

ClosestPair at_point(const EuclideanPoint& p, const EuclideanPoint& q, double s1, double s2,
                     DistanceBranch branch) {
  return ClosestPair{center_dist_fa(p, q), s1, s2, p, q, branch};
}

// Swap roles so that s1 refers to seg1 when a point-segment result was
// computed with seg1 as the segment argument.
ClosestPair swapped(ClosestPair r) {
  std::swap(r.s1, r.s2);
  std::swap(r.first, r.second);
  return r;
}

bool lex_less(const ClosestPair& x, const ClosestPair& y) {
  if (x.squared_distance.value != y.squared_distance.value) {
    return x.squared_distance.value < y.squared_distance.value;
  }
  if (x.s1 != y.s1) return x.s1 < y.s1;
  return x.s2 < y.s2;
}

// Infimum over the union of the four edge restrictions of the unit square.
ClosestPair boundary_minimum(const Segment& seg1, const Segment& seg2, DistanceBranch branch) {
  std::array<ClosestPair, 4> edges{
      center_dist_fb(seg1.start, seg2),                   // s1 = 0
      center_dist_fb(seg1.end, seg2),                     // s1 = 1
      swapped(center_dist_fb(seg2.start, seg1)),          // s2 = 0
      swapped(center_dist_fb(seg2.end, seg1)),            // s2 = 1
  };
  edges[1].s1 = 1.0;
  edges[2].s2 = 0.0;
  edges[3].s2 = 1.0;
  ClosestPair best = *std::min_element(edges.begin(), edges.end(), lex_less);
  best.branch = branch;
  return best;
}

}  // namespace

SquaredDistance center_dist_fa(const EuclideanPoint& p1, const EuclideanPoint& p2) {
  return SquaredDistance{norm2(p1 - p2)};
}

double center_dist_fa_cga(const EuclideanPoint& p1, const EuclideanPoint& p2) {
  return 2.0 * std::abs(scalar_part(inner(point(p1), point(p2))));
}

ClosestPair center_dist_fb(const EuclideanPoint& p, const Segment& seg) {
  const EuclideanPoint& sc = seg.start;
  const EuclideanPoint& ec = seg.end;
  if (seg.is_degenerate()) return at_point(p, sc, 0.0, 0.0, DistanceBranch::PointPoint);

  const EuclideanPoint dir = ec - sc;
  const double along = dot(p - sc, dir);
  const double len2 = dot(dir, dir);
  if (along <= 0.0) return at_point(p, sc, 0.0, 0.0, DistanceBranch::SegmentStart);
  if (len2 <= along) return at_point(p, ec, 0.0, 1.0, DistanceBranch::SegmentEnd);

  const double s = along / len2;
  return at_point(p, sc + s * dir, 0.0, s, DistanceBranch::SegmentInterior);
}

double SegmentPairCoefficients::quadratic(double s1, double s2) const {
  return a * s1 * s1 + 2.0 * b * s1 * s2 + c * s2 * s2 + 2.0 * d * s1 + 2.0 * e * s2 + f;
}

std::pair<double, double> SegmentPairCoefficients::gradient(double s1, double s2) const {
  return {2.0 * (a * s1 + b * s2 + d), 2.0 * (b * s1 + c * s2 + e)};
}

SegmentPairCoefficients segment_pair_coefficients(const Segment& seg1, const Segment& seg2) {
  SegmentPairCoefficients co;
  co.u = seg1.end - seg1.start;
  co.v = seg2.end - seg2.start;
  co.w = seg1.start - seg2.start;
  co.a = dot(co.u, co.u);
  co.b = -dot(co.u, co.v);
  co.c = dot(co.v, co.v);
  co.d = dot(co.u, co.w);
  co.e = -dot(co.v, co.w);
  co.f = dot(co.w, co.w);
  return co;
}

bool is_parallel(const SegmentPairCoefficients& co) {
  const double ac = co.a * co.c;
  return std::abs(co.determinant()) <= kParallelRelEps * std::max(ac, 1.0);
}

StationaryPoint stationary_point(const SegmentPairCoefficients& co) {
  if (is_parallel(co)) return {};
  const double inv = 1.0 / co.determinant();
  return {true, (co.b * co.e - co.c * co.d) * inv, (co.b * co.d - co.a * co.e) * inv};
}

SegmentPairCase classify_segment_pair(const Segment& seg1, const Segment& seg2) {
  const bool deg1 = seg1.is_degenerate();
  const bool deg2 = seg2.is_degenerate();
  if (deg1 && deg2) return SegmentPairCase::BothDegenerate;
  if (deg1) return SegmentPairCase::FirstDegenerate;
  if (deg2) return SegmentPairCase::SecondDegenerate;

  const StationaryPoint sp = stationary_point(segment_pair_coefficients(seg1, seg2));
  if (!sp.exists) return SegmentPairCase::Parallel;
  if (sp.s1k < 0.0) return SegmentPairCase::S1BelowZero;
  if (sp.s1k > 1.0) return SegmentPairCase::S1AboveOne;
  if (sp.s2k < 0.0) return SegmentPairCase::S2BelowZero;
  if (sp.s2k > 1.0) return SegmentPairCase::S2AboveOne;
  return SegmentPairCase::Stationary;
}

ClosestPair center_dist_fc(const Segment& seg1, const Segment& seg2) {
  const bool deg1 = seg1.is_degenerate();
  const bool deg2 = seg2.is_degenerate();
  if (deg1 && deg2) {
    return at_point(seg1.start, seg2.start, 0.0, 0.0, DistanceBranch::PointPoint);
  }
  if (deg1) {
    ClosestPair r = center_dist_fb(seg1.start, seg2);
    r.branch = DistanceBranch::FirstDegenerate;
    return r;
  }
  if (deg2) {
    ClosestPair r = swapped(center_dist_fb(seg2.start, seg1));
    r.s2 = 0.0;
    r.branch = DistanceBranch::SecondDegenerate;
    return r;
  }

  const SegmentPairCoefficients co = segment_pair_coefficients(seg1, seg2);
  const StationaryPoint sp = stationary_point(co);
  if (!sp.exists) return boundary_minimum(seg1, seg2, DistanceBranch::Parallel);
  if (sp.s1k >= 0.0 && sp.s1k <= 1.0 && sp.s2k >= 0.0 && sp.s2k <= 1.0) {
    const EuclideanPoint q1 = seg1.start + sp.s1k * co.u;
    const EuclideanPoint q2 = seg2.start + sp.s2k * co.v;
    return at_point(q1, q2, sp.s1k, sp.s2k, DistanceBranch::Stationary);
  }
  return boundary_minimum(seg1, seg2, DistanceBranch::Boundary);
}

}  // namespace cgacol
