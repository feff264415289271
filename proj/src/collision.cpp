#include "cgacol/collision.hpp"

#include <cmath>
#include <span>

#include "cgacol/error.hpp"
#include "cgacol/kernels.hpp"

namespace cgacol {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double sum_squared(double r1, double r2) { return (r1 + r2) * (r1 + r2); }

bool close(double a, double b) { return std::abs(a - b) <= 1e-12; }

bool close(const EuclideanPoint& a, const EuclideanPoint& b) {
  return close(a.x, b.x) && close(a.y, b.y) && close(a.z, b.z);
}

bool components_equal(const Component& a, const Component& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ba = std::get_if<ClosedBall>(&a)) {
    const auto& bb = std::get<ClosedBall>(b);
    return close(ba->center, bb.center) && close(ba->radius, bb.radius);
  }
  const auto& ca = std::get<Capsule>(a);
  const auto& cb = std::get<Capsule>(b);
  return close(ca.axis.start, cb.axis.start) && close(ca.axis.end, cb.axis.end) &&
         close(ca.radius, cb.radius);
}

kernels::SegmentBatch axes_of(const RobotModel& r) {
  kernels::SegmentBatch batch;
  batch.reserve(r.components.size());
  for (const Component& c : r.components) batch.push_back(component_axis(c));
  return batch;
}

}  // namespace

double component_radius(const Component& c) {
  return std::visit([](const auto& p) { return p.radius; }, c);
}

Segment component_axis(const Component& c) {
  return std::visit(Overloaded{[](const ClosedBall& b) { return Segment{b.center, b.center}; },
                               [](const Capsule& k) { return k.axis; }},
                    c);
}

bool is_ball(const Component& c) { return std::holds_alternative<ClosedBall>(c); }

void RobotModel::validate() const {
  if (components.empty()) throw ValidationError("robot '" + name + "' has no components");
}

std::vector<PairEvidence> CollisionReport::colliding_pairs() const {
  std::vector<PairEvidence> hits;
  for (const PairEvidence& p : pairs) {
    if (p.colliding) hits.push_back(p);
  }
  return hits;
}

bool balls_collide(const ClosedBall& b1, const ClosedBall& b2) {
  return center_dist_fa(b1.center, b2.center).value <= sum_squared(b1.radius, b2.radius);
}

bool ball_capsule_collide(const ClosedBall& b, const Capsule& c) {
  return center_dist_fb(b.center, c.axis).squared_distance.value <=
         sum_squared(b.radius, c.radius);
}

bool capsules_collide(const Capsule& c1, const Capsule& c2) {
  return center_dist_fc(c1.axis, c2.axis).squared_distance.value <=
         sum_squared(c1.radius, c2.radius);
}

ComponentContact components_collide(const Component& a, const Component& b) {
  const double threshold = sum_squared(component_radius(a), component_radius(b));
  const SquaredDistance d2 = std::visit(
      Overloaded{
          [](const ClosedBall& x, const ClosedBall& y) { return center_dist_fa(x.center, y.center); },
          [](const ClosedBall& x, const Capsule& y) {
            return center_dist_fb(x.center, y.axis).squared_distance;
          },
          [](const Capsule& x, const ClosedBall& y) {
            return center_dist_fb(y.center, x.axis).squared_distance;
          },
          [](const Capsule& x, const Capsule& y) {
            return center_dist_fc(x.axis, y.axis).squared_distance;
          }},
      a, b);
  return {d2.value <= threshold, d2, threshold};
}

std::vector<IndexedComponent> robot_union_fold(std::size_t m, std::size_t n,
                                               const ComponentMap& f) {
  std::vector<IndexedComponent> out;
  if (m == 0) out.push_back({0, f(0)});
  for (std::size_t k = 1; k <= n; ++k) {
    if (m <= k) out.push_back({k, f(k)});
  }
  return out;
}

RobotModel robot_from_map(std::string name, std::size_t n, const ComponentMap& f) {
  RobotModel robot{std::move(name), {}};
  for (IndexedComponent& ic : robot_union_fold(0, n, f)) {
    robot.components.push_back(std::move(ic.component));
  }
  return robot;
}

bool robots_equal(const RobotModel& r1, const RobotModel& r2) {
  if (r1.components.size() != r2.components.size()) return false;
  for (std::size_t k = 0; k < r1.components.size(); ++k) {
    if (!components_equal(r1.components[k], r2.components[k])) return false;
  }
  return true;
}

CollisionReport robots_collide(const RobotModel& r1, const RobotModel& r2) {
  r1.validate();
  r2.validate();
  CollisionReport report;
  report.pairs.reserve(r1.components.size() * r2.components.size());
  for (std::size_t i = 0; i < r1.components.size(); ++i) {
    for (std::size_t j = 0; j < r2.components.size(); ++j) {
      const ComponentContact c = components_collide(r1.components[i], r2.components[j]);
      report.pairs.push_back({i, j, c.squared_distance.value, c.squared_threshold, c.colliding});
      report.verdict = report.verdict || c.colliding;
    }
  }
  return report;
}

bool robots_intersect(const RobotModel& r1, const RobotModel& r2) {
  r1.validate();
  r2.validate();
  const kernels::SegmentBatch others = axes_of(r2);
  std::vector<double> row(others.size());
  for (const Component& a : r1.components) {
    kernels::segment_segment_dist2(component_axis(a), others, row);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] <= sum_squared(component_radius(a), component_radius(r2.components[j]))) {
        return true;
      }
    }
  }
  return false;
}

CollisionReport robot_self_collide(const RobotModel& r, bool skip_adjacent) {
  r.validate();
  CollisionReport report;
  const std::size_t n = r.components.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (skip_adjacent && j - i <= 1) continue;
      const ComponentContact c = components_collide(r.components[i], r.components[j]);
      report.pairs.push_back({i, j, c.squared_distance.value, c.squared_threshold, c.colliding});
      report.verdict = report.verdict || c.colliding;
    }
  }
  return report;
}

std::vector<double> distance_matrix(const RobotModel& r1, const RobotModel& r2) {
  const kernels::SegmentBatch others = axes_of(r2);
  const std::size_t cols = others.size();
  std::vector<double> out(r1.components.size() * cols);
  for (std::size_t i = 0; i < r1.components.size(); ++i) {
    kernels::segment_segment_dist2(component_axis(r1.components[i]), others,
                                   std::span<double>(out).subspan(i * cols, cols));
  }
  return out;
}

}  // namespace cgacol
