#include "cgacol/conformal.hpp"

#include <cmath>

#include "cgacol/error.hpp"

namespace cgacol {

Multivector point(const EuclideanPoint& p) {
  if (!p.is_finite()) throw ValidationError("point: non-finite coordinate");
  Multivector m = null_zero() + (0.5 * norm2(p)) * null_inf();
  m[blade::kE1] = p.x;
  m[blade::kE2] = p.y;
  m[blade::kE3] = p.z;
  return m;
}

Multivector sphere(const EuclideanPoint& center, double radius) {
  if (!std::isfinite(radius)) throw ValidationError("sphere: non-finite radius");
  if (radius < 0.0) throw ValidationError("sphere: negative radius");
  return point(center) - (0.5 * radius * radius) * null_inf();
}

Multivector plane(const EuclideanPoint& unit_normal, double offset) {
  if (!unit_normal.is_finite() || !std::isfinite(offset)) {
    throw ValidationError("plane: non-finite input");
  }
  if (std::abs(std::sqrt(norm2(unit_normal)) - 1.0) > 1e-9) {
    throw ValidationError("plane: normal is not unit length");
  }
  Multivector m = offset * null_inf();
  m[blade::kE1] = unit_normal.x;
  m[blade::kE2] = unit_normal.y;
  m[blade::kE3] = unit_normal.z;
  return m;
}

Multivector sphere_opns(const Multivector& p1, const Multivector& p2, const Multivector& p3,
                        const Multivector& p4) {
  return outer(outer(outer(p1, p2), p3), p4);
}

Multivector plane_opns(const Multivector& p1, const Multivector& p2, const Multivector& p3) {
  return outer(outer(outer(p1, p2), p3), null_inf());
}

Multivector circle_opns(const Multivector& p1, const Multivector& p2, const Multivector& p3) {
  return outer(outer(p1, p2), p3);
}

Multivector line_opns(const Multivector& p1, const Multivector& p2) {
  return outer(outer(p1, p2), null_inf());
}

Multivector circle_ipns(const Multivector& s1, const Multivector& s2) { return outer(s1, s2); }

Multivector line_ipns(const Multivector& pi1, const Multivector& pi2) { return outer(pi1, pi2); }

}  // namespace cgacol
