#include "cgacol/multivector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cgacol/error.hpp"

namespace cgacol {

namespace {

using SignTable = std::array<std::array<double, kBlades>, kBlades>;

constexpr SignTable make_reorder_table() {
  SignTable table{};
  for (std::uint32_t a = 0; a < kBlades; ++a) {
    for (std::uint32_t b = 0; b < kBlades; ++b) {
      table[a][b] = reorder_sign(a, b);
    }
  }
  return table;
}

constexpr SignTable kReorder = make_reorder_table();

// Shared driver for the three products; `Keep` decides which blade pairs
// contribute. Zero coefficients are skipped, points and spheres are sparse.
//
// Each output coefficient is a compensated sum (TwoProduct via fma plus
// TwoSum). A point at 1e4 mm carries e+/e- coefficients near 1.5e8 whose
// products cancel down to -(p^2 + q^2)/2, so naive accumulation loses about
// half the significand.
template <typename Keep>
Multivector product(const Multivector& a, const Multivector& b, const Metric& metric,
                    Keep keep) {
  std::array<double, kBlades> hi{};
  std::array<double, kBlades> lo{};
  for (std::uint32_t i = 0; i < kBlades; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (std::uint32_t j = 0; j < kBlades; ++j) {
      const double bj = b[j];
      if (bj == 0.0 || !keep(i, j)) continue;
      const double sign = kReorder[i][j] * metric.shared_factor(i, j);
      if (sign == 0.0) continue;
      const double x = sign * ai;
      const double prod = x * bj;
      const double prod_err = std::fma(x, bj, -prod);
      double& h = hi[i ^ j];
      const double sum = h + prod;
      const double bv = sum - h;
      const double sum_err = (h - (sum - bv)) + (prod - bv);
      h = sum;
      lo[i ^ j] += sum_err + prod_err;
    }
  }
  Multivector out;
  for (std::uint32_t k = 0; k < kBlades; ++k) out[k] = hi[k] + lo[k];
  return out;
}

}  // namespace

double Metric::shared_factor(std::uint32_t a, std::uint32_t b) const {
  double factor = 1.0;
  for (std::uint32_t common = a & b; common != 0; common &= common - 1) {
    factor *= diag[static_cast<std::size_t>(__builtin_ctz(common))];
  }
  return factor;
}

Multivector Multivector::blade(std::uint32_t mask, double coeff) {
  if (mask >= kBlades) {
    throw ValidationError("blade mask " + std::to_string(mask) + " outside [0, 31]");
  }
  Multivector m;
  m.coeffs_[mask] = coeff;
  return m;
}

Multivector Multivector::grade(int k) const {
  Multivector out;
  for (std::uint32_t i = 0; i < kBlades; ++i) {
    if (grade_of(i) == k) out.coeffs_[i] = coeffs_[i];
  }
  return out;
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Multivector::is_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return std::isfinite(c); });
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  for (std::size_t i = 0; i < kBlades; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  for (std::size_t i = 0; i < kBlades; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double k) {
  for (double& c : coeffs_) c *= k;
  return *this;
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  return (a - b).max_abs();
}

Multivector mbasis(std::span<const int> indices) {
  std::uint32_t mask = 0;
  for (int index : indices) {
    if (index < 1 || index > kBasisVectors) {
      throw ValidationError("mbasis index " + std::to_string(index) + " outside {1..5}");
    }
    mask |= 1u << (index - 1);
  }
  return Multivector::blade(mask);
}

Multivector mbasis(std::initializer_list<int> indices) {
  return mbasis(std::span<const int>(indices.begin(), indices.size()));
}

Multivector null_zero() {
  Multivector m;
  m[blade::kEMinus] = 0.5;
  m[blade::kEPlus] = -0.5;
  return m;
}

Multivector null_inf() {
  Multivector m;
  m[blade::kEMinus] = 1.0;
  m[blade::kEPlus] = 1.0;
  return m;
}

Multivector outer(const Multivector& a, const Multivector& b) {
  return product(a, b, Metric::conformal(),
                 [](std::uint32_t i, std::uint32_t j) { return (i & j) == 0; });
}

Multivector inner(const Multivector& a, const Multivector& b, const Metric& metric) {
  // Left contraction keeps pairs where blade i is contained in blade j.
  return product(a, b, metric, [](std::uint32_t i, std::uint32_t j) { return (i & j) == i; });
}

Multivector geometric(const Multivector& a, const Multivector& b, const Metric& metric) {
  return product(a, b, metric, [](std::uint32_t, std::uint32_t) { return true; });
}

}  // namespace cgacol
