#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace cgacol {

/// Number of basis vectors of the conformal model of 3D space.
inline constexpr int kBasisVectors = 5;
/// Number of basis blades (2^5).
inline constexpr std::size_t kBlades = std::size_t{1} << kBasisVectors;

/// Blade bitmasks over the ordered orthogonal basis (e1, e2, e3, e+, e-).
/// Bit k set means basis vector k+1 participates in the blade.
namespace blade {
inline constexpr std::uint32_t kScalar = 0;
inline constexpr std::uint32_t kE1 = 1u << 0;
inline constexpr std::uint32_t kE2 = 1u << 1;
inline constexpr std::uint32_t kE3 = 1u << 2;
inline constexpr std::uint32_t kEPlus = 1u << 3;
inline constexpr std::uint32_t kEMinus = 1u << 4;
}  // namespace blade

/// Diagonal signature of the basis. The conformal algebra uses (+,+,+,+,-);
/// other signatures exist only so tests can exercise a corrupted algebra.
struct Metric {
  std::array<double, kBasisVectors> diag{1.0, 1.0, 1.0, 1.0, -1.0};

  static constexpr Metric conformal() { return {}; }

  /// Product of the squares of the basis vectors shared by both blades.
  double shared_factor(std::uint32_t a, std::uint32_t b) const;

  friend bool operator==(const Metric&, const Metric&) = default;
};

/// Number of basis vectors in a blade.
constexpr int grade_of(std::uint32_t mask) { return __builtin_popcount(mask); }

/// Sign picked up by reordering the concatenation of two canonical blades
/// into canonical (ascending) order, ignoring the metric.
constexpr double reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t shifted = a >> 1; shifted != 0; shifted >>= 1) {
    swaps += __builtin_popcount(shifted & b);
  }
  return (swaps & 1) ? -1.0 : 1.0;
}

/// Dense element of the 5D conformal geometric algebra: one coefficient per
/// basis blade, indexed by blade bitmask.
class Multivector {
 public:
  constexpr Multivector() = default;
  explicit constexpr Multivector(const std::array<double, kBlades>& coeffs)
      : coeffs_(coeffs) {}

  static constexpr Multivector scalar(double value) {
    Multivector m;
    m.coeffs_[blade::kScalar] = value;
    return m;
  }

  /// Unit blade with the given bitmask; masks >= 32 are rejected.
  static Multivector blade(std::uint32_t mask, double coeff = 1.0);

  constexpr double operator[](std::size_t mask) const { return coeffs_[mask]; }
  constexpr double& operator[](std::size_t mask) { return coeffs_[mask]; }

  constexpr const std::array<double, kBlades>& coeffs() const { return coeffs_; }

  /// Grade-k projection.
  Multivector grade(int k) const;

  /// Largest absolute coefficient.
  double max_abs() const;

  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

  /// True when every coefficient is finite.
  bool is_finite() const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double k);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double k) { return a *= k; }
  friend Multivector operator*(double k, Multivector a) { return a *= k; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  std::array<double, kBlades> coeffs_{};
};

/// Largest componentwise deviation between two multivectors.
double max_abs_diff(const Multivector& a, const Multivector& b);

/// Basis blade from a set of 1-based basis indices drawn from {1..5}
/// (1,2,3 = e1,e2,e3; 4 = e+; 5 = e-). The empty set is the scalar unit.
/// Throws ValidationError for an index outside {1..5}.
Multivector mbasis(std::span<const int> indices);
Multivector mbasis(std::initializer_list<int> indices);

/// e0 = (e- - e+) / 2, the origin.
Multivector null_zero();
/// einf = e- + e+, the point at infinity.
Multivector null_inf();

// Products. All three are bilinear; the metric defaults to the conformal one.

/// Outer (wedge) product.
Multivector outer(const Multivector& a, const Multivector& b);

/// Inner product, taken as the left contraction a _| b. On two grade-1
/// vectors this is the signature-weighted dot product.
Multivector inner(const Multivector& a, const Multivector& b,
                  const Metric& metric = Metric::conformal());

/// Geometric (Clifford) product.
Multivector geometric(const Multivector& a, const Multivector& b,
                      const Metric& metric = Metric::conformal());

/// Coefficient of the scalar blade.
inline double scalar_part(const Multivector& a) { return a[blade::kScalar]; }

}  // namespace cgacol
