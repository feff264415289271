#include "cgacol/selftest.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "cgacol/collision.hpp"
#include "cgacol/conformal.hpp"
#include "cgacol/distance.hpp"

namespace cgacol {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

SelftestCheck check_exact(std::string name, double got, double want, double tol) {
  const bool ok = std::abs(got - want) <= tol;
  return {std::move(name), ok, "got " + fmt(got) + ", want " + fmt(want)};
}

}  // namespace

std::vector<SelftestCheck> run_selftest_checks(const Metric& metric) {
  std::vector<SelftestCheck> checks;
  const Multivector e0 = null_zero();
  const Multivector einf = null_inf();

  checks.push_back(
      check_exact("null-basis-e0-square", scalar_part(geometric(e0, e0, metric)), 0.0, 1e-15));
  checks.push_back(check_exact("null-basis-einf-square",
                               scalar_part(geometric(einf, einf, metric)), 0.0, 1e-15));
  checks.push_back(
      check_exact("null-basis-contraction", scalar_part(inner(e0, einf, metric)), -1.0, 1e-15));

  {
    // Grade-1 product split: xy = x.y + x^y.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
      Multivector x, y;
      for (std::uint32_t k = 0; k < kBasisVectors; ++k) {
        x[1u << k] = u(rng);
        y[1u << k] = u(rng);
      }
      worst = std::max(worst, max_abs_diff(geometric(x, y, metric),
                                           inner(x, y, metric) + outer(x, y)));
    }
    checks.push_back({"grade1-product-split", worst <= 1e-12, "max deviation " + fmt(worst)});
  }

  {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
      const EuclideanPoint p{u(rng), u(rng), u(rng)};
      const EuclideanPoint q{u(rng), u(rng), u(rng)};
      const double cga = 2.0 * std::abs(scalar_part(inner(point(p), point(q), metric)));
      const double euclid = norm2(p - q);
      worst = std::max(worst, std::abs(cga - euclid) / std::max(1.0, euclid));
    }
    checks.push_back({"Eq2-distance-identity", worst <= 1e-9, "max scaled error " + fmt(worst)});
  }

  {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-500.0, 500.0);
    bool ok = true;
    for (int n = 0; n < 1000 && ok; ++n) {
      const EuclideanPoint sc{u(rng), u(rng), u(rng)};
      const EuclideanPoint p{u(rng), u(rng), u(rng)};
      const Segment seg{sc, sc};
      ok = segment_point_at(seg, std::abs(u(rng)) / 500.0) == sc &&
           center_dist_fb(p, seg).squared_distance.value == center_dist_fa(p, sc).value;
    }
    checks.push_back({"degenerate-segment-is-point", ok, ok ? "1000 instances" : "mismatch"});
  }

  {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    std::uniform_real_distribution<double> ur(0.0, 50.0);
    bool ok = true;
    for (int n = 0; n < 1000 && ok; ++n) {
      const EuclideanPoint sc{u(rng), u(rng), u(rng)};
      const Capsule cap{sc, sc, ur(rng)};
      const ClosedBall ball{sc, cap.radius};
      const EuclideanPoint x{u(rng), u(rng), u(rng)};
      const auto as_ball = capsule_degenerate_as_ball(cap);
      ok = as_ball && *as_ball == ball && capsule_contains(cap, x) == ball_contains(ball, x);
    }
    checks.push_back({"degenerate-capsule-is-ball", ok, ok ? "1000 instances" : "mismatch"});
  }

  {
    const ComponentMap f = [](std::size_t k) -> Component {
      const double z = static_cast<double>(k);
      return Capsule{{0, 0, z}, {0, 0, z + 1}, 1.0 + z};
    };
    bool ok = true;
    for (std::size_t n = 0; n < 8 && ok; ++n) {
      const auto single = robot_union_fold(n, n, f);
      ok = single.size() == 1 && single[0].index == n && single[0].component == f(n);
    }
    checks.push_back({"singleton-fold", ok, ok ? "n = 0..7" : "mismatch"});
  }

  return checks;
}

bool run_selftest(std::ostream& out, const Metric& metric) {
  bool all = true;
  for (const SelftestCheck& c : run_selftest_checks(metric)) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
    all = all && c.passed;
  }
  out << (all ? "selftest: all checks passed" : "selftest: FAILED") << '\n';
  return all;
}

}  // namespace cgacol
