#pragma once

// Conformal embeddings of Euclidean objects. Inner-product (IPNS) forms are
// built from coordinates; outer-product (OPNS) forms wedge conformal points.

#include "cgacol/multivector.hpp"
#include "cgacol/point.hpp"

namespace cgacol {

enum class ObjectKind { Point, Sphere, Plane, Circle, Line };
enum class NullSpaceForm { InnerProduct, OuterProduct };

struct ConformalObject {
  ObjectKind kind;
  Multivector rep;
  NullSpaceForm form;
};

/// P = p + (p.p)/2 einf + e0. Throws ValidationError on non-finite input.
Multivector point(const EuclideanPoint& p);

/// S = P - r^2/2 einf. Throws ValidationError for r < 0 or non-finite input.
Multivector sphere(const EuclideanPoint& center, double radius);

/// pi = n + d einf for a unit normal n (|n| = 1 within 1e-9).
Multivector plane(const EuclideanPoint& unit_normal, double offset);

/// P1 ^ P2 ^ P3 ^ P4.
Multivector sphere_opns(const Multivector& p1, const Multivector& p2, const Multivector& p3,
                        const Multivector& p4);
/// P1 ^ P2 ^ P3 ^ einf.
Multivector plane_opns(const Multivector& p1, const Multivector& p2, const Multivector& p3);
/// P1 ^ P2 ^ P3.
Multivector circle_opns(const Multivector& p1, const Multivector& p2, const Multivector& p3);
/// P1 ^ P2 ^ einf.
Multivector line_opns(const Multivector& p1, const Multivector& p2);

/// S1 ^ S2, the circle where two spheres meet.
Multivector circle_ipns(const Multivector& s1, const Multivector& s2);
/// pi1 ^ pi2, the line where two planes meet.
Multivector line_ipns(const Multivector& pi1, const Multivector& pi2);

}  // namespace cgacol
