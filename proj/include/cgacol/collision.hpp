#pragma once

// Collision predicates between primitives and between robots built as
// unions of primitives. All sets are closed: touching counts as colliding.

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cgacol/distance.hpp"
#include "cgacol/primitives.hpp"

namespace cgacol {

/// One robot component: a closed ball (end effector) or a capsule (link).
using Component = std::variant<ClosedBall, Capsule>;

double component_radius(const Component& c);
/// Center set of the component as a segment (a ball is a point segment).
Segment component_axis(const Component& c);
bool is_ball(const Component& c);

/// Robot body: components indexed 0..n in order.
struct RobotModel {
  std::string name;
  std::vector<Component> components;

  /// Throws ValidationError when the model has no components.
  void validate() const;

  friend bool operator==(const RobotModel&, const RobotModel&) = default;
};

bool balls_collide(const ClosedBall& b1, const ClosedBall& b2);
bool ball_capsule_collide(const ClosedBall& b, const Capsule& c);
bool capsules_collide(const Capsule& c1, const Capsule& c2);

struct ComponentContact {
  bool colliding = false;
  SquaredDistance squared_distance;
  double squared_threshold = 0.0;  // (r1 + r2)^2
};

/// Dispatch over the ball/capsule combinations, returning the evidence used.
ComponentContact components_collide(const Component& a, const Component& b);

// --- robot body as a folded union ---------------------------------------

/// Indexed components selected by a range; the component set of
/// `robot (m..n) f`.
struct IndexedComponent {
  std::size_t index;
  Component component;

  friend bool operator==(const IndexedComponent&, const IndexedComponent&) = default;
};
using ComponentMap = std::function<Component(std::size_t)>;

/// Union of f(k) for m <= k <= n, built by the recursion
///   robot (m..0)       = {f(0)} if m = 0 else {}
///   robot (m..n+1)     = robot (m..n) + f(n+1) if m <= n+1 else robot (m..n).
std::vector<IndexedComponent> robot_union_fold(std::size_t m, std::size_t n,
                                               const ComponentMap& f);

/// Robot over the range 0..n of a mapping.
RobotModel robot_from_map(std::string name, std::size_t n, const ComponentMap& f);

/// Same index set and pointwise-equal components (parameters within 1e-12).
bool robots_equal(const RobotModel& r1, const RobotModel& r2);

// --- whole-robot checks ---------------------------------------------------

struct PairEvidence {
  std::size_t i = 0;  // component index in the first robot
  std::size_t j = 0;  // component index in the second robot
  double squared_distance = 0.0;
  double squared_threshold = 0.0;
  bool colliding = false;
};

struct CollisionReport {
  bool verdict = false;
  std::vector<PairEvidence> pairs;  // lexicographic (i, j) order

  std::vector<PairEvidence> colliding_pairs() const;
};

/// Evaluates every component pair across the two robots; the verdict is the
/// disjunction of the pairwise predicates. Throws ValidationError when either
/// robot is empty.
CollisionReport robots_collide(const RobotModel& r1, const RobotModel& r2);

/// Boolean-only check that stops at the first colliding pair. Uses the
/// batched distance kernels.
bool robots_intersect(const RobotModel& r1, const RobotModel& r2);

/// Self-collision within one robot over pairs i < j. With skip_adjacent,
/// pairs with j - i <= 1 (joint-connected links) are not evaluated.
CollisionReport robot_self_collide(const RobotModel& r, bool skip_adjacent);

/// Squared center distances between all component pairs, row-major with
/// r2.components.size() columns, computed by the batched kernels.
std::vector<double> distance_matrix(const RobotModel& r1, const RobotModel& r2);

}  // namespace cgacol
