#pragma once

#include <cmath>

namespace cgacol {

/// Cartesian point (or displacement) in 3D Euclidean space, millimeters.
struct EuclideanPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

  EuclideanPoint& operator+=(const EuclideanPoint& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  EuclideanPoint& operator-=(const EuclideanPoint& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }

  friend EuclideanPoint operator+(EuclideanPoint a, const EuclideanPoint& b) { return a += b; }
  friend EuclideanPoint operator-(EuclideanPoint a, const EuclideanPoint& b) { return a -= b; }
  friend EuclideanPoint operator*(double k, const EuclideanPoint& a) {
    return {k * a.x, k * a.y, k * a.z};
  }
  friend bool operator==(const EuclideanPoint&, const EuclideanPoint&) = default;
};

inline double dot(const EuclideanPoint& a, const EuclideanPoint& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm2(const EuclideanPoint& a) { return dot(a, a); }

}  // namespace cgacol
