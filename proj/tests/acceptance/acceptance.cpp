// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cgacol/collision.hpp"
#include "cgacol/conformal.hpp"
#include "cgacol/distance.hpp"
#include "cgacol/oracle.hpp"
#include "cgacol/scene.hpp"
#include "cli.hpp"
#include "test_support.hpp"

using namespace cgacol;
using namespace cgacol::testing;
using json = nlohmann::json;

namespace {

const std::string kTable3 = CGACOL_DATA_DIR "/table3.scene";
const std::string kSeparated = CGACOL_DATA_DIR "/separated.scene";

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Accumulates failures; keeps the first few messages for the report line.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary + ", " + std::to_string(checks) + " checks"};
    return {false, std::to_string(failures) + "/" + std::to_string(checks) +
                       " checks failed; first: " + first};
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

// AC1 -----------------------------------------------------------------------
Outcome table3_reproduction() {
  Tally t;
  std::string text;
  const auto start = std::chrono::steady_clock::now();
  const int code = run_cli({"check", "--all-pairs", "--format", "json", kTable3}, &text);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(code == 1, "exit status " + std::to_string(code) + ", want 1");
  const json doc = json::parse(text);
  const Scene scene = load_scene(kTable3);
  t.expect(doc["pairs"].size() == 49, "pair count");
  bool saw = false;
  for (const json& p : doc["pairs"]) {
    const std::size_t i = p["i"], j = p["j"];
    const double d2 = p["squared_distance"];
    const double ref = oracle::euclid_reference_distance2(scene.robots[0].components.at(i),
                                                          scene.robots[1].components.at(j));
    t.expect(rel_close(d2, ref, 1e-9), "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") " + num(d2) + " vs oracle " + num(ref));
    if (i == 6 && j == 5) {
      saw = true;
      t.expect(p["colliding"] == true, "(6,5) not colliding");
      t.expect(d2 <= 1e-20, "(6,5) squared distance " + num(d2));
      t.expect(p["threshold"].get<double>() == 961.0, "(6,5) threshold");
    }
  }
  t.expect(saw, "(6,5) missing from report");
  t.expect(secs < 0.1, "runtime " + num(secs) + " s");
  return t.outcome("(6,5) squared distance 0 <= 961, " + num(secs) + " s");
}

// AC2 -----------------------------------------------------------------------
Outcome eq2_identity() {
  Tally t;
  Rng rng(2001);
  double worst = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 0; n < 100000; ++n) {
    const EuclideanPoint p = random_point(rng, 1e4), q = random_point(rng, 1e4);
    const double d2 = norm2(p - q);
    const double cga = 2.0 * std::abs(scalar_part(inner(point(p), point(q))));
    const double err = std::abs(cga - d2) / std::max(1.0, d2);
    worst = std::max(worst, err);
    t.expect(err <= 1e-9, "scaled error " + num(err));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 5.0, "runtime " + num(secs) + " s");
  return t.outcome("max scaled error " + num(worst) + ", " + num(secs) + " s");
}

// AC3 -----------------------------------------------------------------------
Outcome null_basis() {
  Tally t;
  const Multivector e0 = null_zero(), einf = null_inf();
  const double s00 = scalar_part(geometric(e0, e0, Metric::conformal()));
  const double sii = scalar_part(geometric(einf, einf, Metric::conformal()));
  const double i00 = scalar_part(inner(e0, e0));
  const double iii = scalar_part(inner(einf, einf));
  const double c = scalar_part(inner(e0, einf));
  t.expect(s00 == 0.0 && i00 == 0.0, "e0^2 scalar part " + num(s00));
  t.expect(sii == 0.0 && iii == 0.0, "einf^2 scalar part " + num(sii));
  t.expect(std::abs(c + 1.0) <= 1e-15, "e0.einf = " + num(c));
  t.expect(std::abs(scalar_part(inner(einf, e0)) + 1.0) <= 1e-15, "einf.e0");
  return t.outcome("e0.einf = " + num(c));
}

// AC4 -----------------------------------------------------------------------
Outcome nine_cases() {
  Tally t;
  Rng rng(4001);
  const auto line = oracle::GridSpec::line();
  const auto square = oracle::GridSpec::square();
  const auto start = std::chrono::steady_clock::now();
  long per_family[5] = {};
  long stationary = 0;

  const auto check_pair = [&](const Segment& s1, const Segment& s2, const char* family) {
    const ClosestPair r = center_dist_fc(s1, s2);
    const double v = r.squared_distance.value;
    const double ref = oracle::reference_segment_segment2(s1, s2);
    const std::string tag = std::string(family) + " fc ";
    t.expect(rel_close(v, ref, 1e-9), tag + num(v) + " vs reference " + num(ref));
    const double g = oracle::oracle_segment_segment(s1, s2, square);
    const double len = std::sqrt(s1.length2()) + std::sqrt(s2.length2());
    const double tol = 1e-9 * std::max(1.0, v);
    t.expect(g >= v - tol, tag + "above grid");
    t.expect(g <= v + oracle::grid_slack(len, std::sqrt(v), square) + tol,
             tag + "grid gap exceeds slack");
    if (!s1.is_degenerate() && !s2.is_degenerate()) {
      const auto co = segment_pair_coefficients(s1, s2);
      const StationaryPoint sp = stationary_point(co);
      if (sp.exists && sp.s1k >= 0 && sp.s1k <= 1 && sp.s2k >= 0 && sp.s2k <= 1) {
        ++stationary;
        const auto [g1, g2] = co.gradient(sp.s1k, sp.s2k);
        const double scale = (co.a + co.c) * (1.0 + sp.s1k + sp.s2k) + std::abs(co.d) +
                             std::abs(co.e);
        t.expect(std::abs(g1) <= 1e-8 * scale && std::abs(g2) <= 1e-8 * scale,
                 tag + "gradient at stationary point");
      }
    }
  };

  // Point vs segment.
  for (int n = 0; n < 2000; ++n, ++per_family[0]) {
    const EuclideanPoint p = random_point(rng, 500.0);
    const Segment seg = random_segment(rng, 500.0);
    const double v = center_dist_fb(p, seg).squared_distance.value;
    const double ref = oracle::reference_point_segment2(p, seg);
    t.expect(rel_close(v, ref, 1e-9), "fb " + num(v) + " vs reference " + num(ref));
    const double g = oracle::oracle_point_segment(p, seg, line);
    const double tol = 1e-9 * std::max(1.0, v);
    t.expect(g >= v - tol, "fb above grid");
    t.expect(g <= v + oracle::grid_slack(std::sqrt(seg.length2()), std::sqrt(v), line) + tol,
             "fb grid gap exceeds slack");
  }
  // Generic segment pairs.
  for (int n = 0; n < 2000; ++n, ++per_family[1]) {
    check_pair(random_segment(rng, 200.0), random_segment(rng, 200.0), "generic");
  }
  // Forced parallel.
  for (int n = 0; n < 2000; ++n, ++per_family[2]) {
    const Segment s1 = random_segment(rng, 200.0);
    check_pair(s1, parallel_to(rng, s1, 200.0), "parallel");
  }
  // Forced degenerate: first, second or both segments collapsed.
  for (int n = 0; n < 2000; ++n, ++per_family[3]) {
    const Segment seg = random_segment(rng, 200.0);
    const Segment pt = point_segment(rng, 200.0);
    switch (n % 3) {
      case 0:
        check_pair(pt, seg, "degenerate");
        break;
      case 1:
        check_pair(seg, pt, "degenerate");
        break;
      default:
        check_pair(pt, point_segment(rng, 200.0), "degenerate");
        break;
    }
  }
  // Forced boundary clamp: stationary point exists but leaves the unit square.
  const SegmentPairCase clamps[] = {SegmentPairCase::S1BelowZero, SegmentPairCase::S1AboveOne,
                                    SegmentPairCase::S2BelowZero, SegmentPairCase::S2AboveOne};
  for (int n = 0; n < 2000; ++per_family[4], ++n) {
    const SegmentPairCase want = clamps[n % 4];
    for (;;) {
      const Segment s1 = random_segment(rng, 200.0), s2 = random_segment(rng, 200.0);
      if (classify_segment_pair(s1, s2) != want) continue;
      check_pair(s1, s2, "clamp");
      break;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  long total = 0;
  for (long f : per_family) {
    total += f;
    t.expect(f >= 1000, "family below 1000 instances");
  }
  t.expect(total >= 10000, "fewer than 10^4 instances");
  t.expect(secs < 60.0, "runtime " + num(secs) + " s");
  return t.outcome(std::to_string(total) + " instances in 5 families, " +
                   std::to_string(stationary) + " interior stationary points, " + num(secs) +
                   " s");
}

// AC5 -----------------------------------------------------------------------
Outcome degeneracy() {
  Tally t;
  Rng rng(5001);
  for (int n = 0; n < 1000; ++n) {
    const EuclideanPoint p = random_point(rng, 500.0);
    const EuclideanPoint sc = random_point(rng, 500.0);
    t.expect(center_dist_fb(p, Segment(sc, sc)).squared_distance.value ==
                 center_dist_fa(p, sc).value,
             "fb on a point segment differs from fa");
  }
  for (int n = 0; n < 1000; ++n) {
    const EuclideanPoint c = random_point(rng, 100.0);
    const double r = uniform(rng, 0.0, 50.0);
    const Capsule cap{c, c, r};
    const ClosedBall ball{c, r};
    const ClosedBall other_ball{random_point(rng, 100.0), uniform(rng, 0.0, 50.0)};
    const Capsule other_cap{random_segment(rng, 100.0), uniform(rng, 0.0, 50.0)};
    t.expect(components_collide(cap, other_ball).colliding ==
                 components_collide(ball, other_ball).colliding,
             "degenerate capsule vs ball");
    t.expect(components_collide(cap, other_cap).colliding ==
                 components_collide(ball, other_cap).colliding,
             "degenerate capsule vs capsule");
  }
  return t.outcome("1000 fb/fa and 2000 capsule/ball instances");
}

// AC6 -----------------------------------------------------------------------
struct Quad {
  int x, y, z, len;
};
constexpr Quad kQuads[] = {{1, 2, 2, 3}, {2, 3, 6, 7}, {1, 4, 8, 9}, {4, 4, 7, 9}, {2, 6, 9, 11}};

EuclideanPoint int_point(Rng& rng, int half) {
  const auto i = [&] { return static_cast<double>(static_cast<int>(rng() % (2 * half + 1)) - half); };
  return {i(), i(), i()};
}

// Permutes and flips coordinates of v; the integer lengths are preserved.
EuclideanPoint shuffle(Rng& rng, EuclideanPoint v) {
  double c[3] = {v.x, v.y, v.z};
  for (int k = 2; k > 0; --k) std::swap(c[k], c[rng() % (k + 1)]);
  for (double& x : c) {
    if (rng() % 2) x = -x;
  }
  return {c[0], c[1], c[2]};
}

Outcome predicates() {
  Tally t;
  Rng rng(6001);
  for (int n = 0; n < 1000; ++n) {
    const ClosedBall a{random_point(rng, 100.0), uniform(rng, 0, 60)};
    const ClosedBall b{random_point(rng, 100.0), uniform(rng, 0, 60)};
    const double r = a.radius + b.radius;
    const bool want = oracle::euclid_reference_distance2(a, b) <= r * r;
    t.expect(balls_collide(a, b) == want, "ball/ball");
  }
  for (int n = 0; n < 1000; ++n) {
    const ClosedBall a{random_point(rng, 100.0), uniform(rng, 0, 60)};
    const Capsule c{random_segment(rng, 100.0), uniform(rng, 0, 60)};
    const double r = a.radius + c.radius;
    const bool want = oracle::euclid_reference_distance2(a, c) <= r * r;
    t.expect(ball_capsule_collide(a, c) == want, "ball/capsule");
  }
  for (int n = 0; n < 1000; ++n) {
    const Capsule c1{random_segment(rng, 100.0), uniform(rng, 0, 60)};
    const Capsule c2{random_segment(rng, 100.0), uniform(rng, 0, 60)};
    const double r = c1.radius + c2.radius;
    const bool want = oracle::euclid_reference_distance2(c1, c2) <= r * r;
    t.expect(capsules_collide(c1, c2) == want, "capsule/capsule");
  }

  // Tangency with exactly representable geometry.
  long tangent = 0;
  for (int n = 0; n < 300; ++n) {
    const Quad q = kQuads[rng() % 5];
    const int k = 1 + static_cast<int>(rng() % 20);
    const EuclideanPoint base = int_point(rng, 500);
    const EuclideanPoint offset =
        shuffle(rng, {static_cast<double>(q.x * k), static_cast<double>(q.y * k),
                      static_cast<double>(q.z * k)});
    const int gap = q.len * k;
    const int r1 = static_cast<int>(rng() % (gap + 1));
    const double ra = r1, rb = gap - r1;

    // Ball/ball.
    t.expect(balls_collide({base, ra}, {base + offset, rb}), "tangent balls");
    // Ball against a capsule end cap, axis pointing away from the ball.
    const Capsule cap{base + offset, base + 2.0 * offset, rb};
    t.expect(ball_capsule_collide({base, ra}, cap), "tangent ball/capsule end");
    // Ball against the capsule side, and two crossing capsules: gap 5k split
    // into integer radii. Axis lengths are powers of two so the closest
    // parameters are exact.
    const double half = static_cast<double>(1 << (1 + rng() % 6));
    const int s1 = static_cast<int>(rng() % (5 * k + 1));
    const double rs1 = s1, rs2 = 5 * k - s1;
    const Capsule along_x{{base.x - half, base.y, base.z}, {base.x + half, base.y, base.z}, rs2};
    const EuclideanPoint perp{0.0, static_cast<double>(3 * k), static_cast<double>(4 * k)};
    t.expect(ball_capsule_collide({base + perp, rs1}, along_x), "tangent ball/capsule side");
    const Capsule cross{{base.x + half / 2, base.y - half, base.z + 5.0 * k},
                        {base.x + half / 2, base.y + half, base.z + 5.0 * k}, rs1};
    t.expect(capsules_collide(along_x, cross), "tangent crossing capsules");
    // Parallel overlapping capsules, when the offset is perpendicular to x.
    const Capsule c1{along_x.axis, ra};
    const Capsule c2{c1.axis.start + offset + EuclideanPoint{half / 2, 0, 0},
                     c1.axis.end + offset + EuclideanPoint{half / 2, 0, 0}, rb};
    const double ox = offset.x;
    if (ox == 0.0) t.expect(capsules_collide(c1, c2), "tangent parallel capsules");
    tangent += 4 + (ox == 0.0);
  }
  return t.outcome("3000 random pairs, " + std::to_string(tangent) + " tangent pairs");
}

// AC7 -----------------------------------------------------------------------
Component random_component(Rng& rng) {
  const double r = uniform(rng, 0.0, 30.0);
  if (rng() % 3 == 0) return ClosedBall{random_point(rng, 200.0), r};
  return Capsule{random_segment(rng, 200.0), r};
}

std::vector<IndexedComponent> fold_reference(std::size_t m, std::size_t n, const ComponentMap& f) {
  if (n == 0) return m == 0 ? std::vector<IndexedComponent>{{0, f(0)}} : std::vector<IndexedComponent>{};
  std::vector<IndexedComponent> prev = fold_reference(m, n - 1, f);
  if (m <= n) prev.push_back({n, f(n)});
  return prev;
}

Outcome fold_laws() {
  Tally t;
  Rng rng(7001);
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<Component> table;
    for (int k = 0; k < 16; ++k) table.push_back(random_component(rng));
    const std::vector<Component> copy = table;
    const ComponentMap f = [&](std::size_t k) { return table.at(k); };
    const ComponentMap g = [&](std::size_t k) { return copy.at(k); };
    const std::size_t m = rng() % 16, n = rng() % 16;
    t.expect(robot_union_fold(m, n, f) == fold_reference(m, n, f), "fold recursion");
    t.expect(robot_union_fold(n, n, f) == std::vector<IndexedComponent>{{n, f(n)}}, "singleton");
    if (n + 1 < 16) {
      auto step = robot_union_fold(m, n, f);
      if (m <= n + 1) step.push_back({n + 1, f(n + 1)});
      t.expect(robot_union_fold(m, n + 1, f) == step, "successor step");
    }
    t.expect(robots_equal(robot_from_map("f", n, f), robot_from_map("g", n, g)),
             "pointwise-equal maps");
  }
  for (int rep = 0; rep < 1000; ++rep) {
    RobotModel a{"a", {}}, b{"b", {}};
    const std::size_t na = 1 + rng() % 10, nb = 1 + rng() % 10;
    for (std::size_t k = 0; k < na; ++k) a.components.push_back(random_component(rng));
    for (std::size_t k = 0; k < nb; ++k) b.components.push_back(random_component(rng));
    bool any = false;
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        const double r = component_radius(a.components[i]) + component_radius(b.components[j]);
        any = any ||
              oracle::euclid_reference_distance2(a.components[i], b.components[j]) <= r * r;
      }
    }
    const CollisionReport rep_ab = robots_collide(a, b);
    t.expect(rep_ab.verdict == any, "double-loop verdict");
    t.expect(rep_ab.pairs.size() == na * nb, "pair count");
    t.expect(robots_collide(b, a).verdict == any, "symmetry");
  }
  return t.outcome("500 fold ranges, 1000 robot pairs");
}

// AC8 -----------------------------------------------------------------------
double random_coordinate(Rng& rng) {
  switch (rng() % 4) {
    case 0:
      return uniform(rng, -1e4, 1e4);
    case 1:
      return static_cast<double>(static_cast<std::int64_t>(rng() % 4001) - 2000) / 8.0;
    case 2:
      return uniform(rng, -1.0, 1.0) * std::pow(10.0, uniform(rng, -300, 300));
    default:
      for (;;) {
        const double d = std::bit_cast<double>(static_cast<std::uint64_t>(rng()));
        if (std::isfinite(d)) return d;
      }
  }
}

Outcome round_trip() {
  Tally t;
  Rng rng(8001);
  for (int rep = 0; rep < 100; ++rep) {
    Scene s;
    const std::size_t robots = 1 + rng() % 4;
    std::vector<std::uint64_t> want;
    for (std::size_t r = 0; r < robots; ++r) {
      RobotModel m{"robot_" + std::to_string(r), {}};
      const std::size_t n = 1 + rng() % 9;
      for (std::size_t k = 0; k < n; ++k) {
        double v[7];
        for (double& x : v) x = random_coordinate(rng);
        v[6] = std::abs(v[6]);
        if (rng() % 2) {
          m.components.push_back(ClosedBall{{v[0], v[1], v[2]}, v[6]});
          for (int i : {0, 1, 2, 6}) want.push_back(std::bit_cast<std::uint64_t>(v[i]));
        } else {
          m.components.push_back(Capsule{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, v[6]});
          for (double x : v) want.push_back(std::bit_cast<std::uint64_t>(x));
        }
      }
      s.robots.push_back(std::move(m));
    }
    const Scene back = parse_scene(serialize_scene(s));
    t.expect(back == s, "structural equality");
    std::vector<std::uint64_t> got;
    for (const RobotModel& r : back.robots) {
      for (const Component& c : r.components) {
        if (const auto* b = std::get_if<ClosedBall>(&c)) {
          for (double x : {b->center.x, b->center.y, b->center.z, b->radius})
            got.push_back(std::bit_cast<std::uint64_t>(x));
        } else {
          const auto& cap = std::get<Capsule>(c);
          for (double x : {cap.axis.start.x, cap.axis.start.y, cap.axis.start.z, cap.axis.end.x,
                           cap.axis.end.y, cap.axis.end.z, cap.radius})
            got.push_back(std::bit_cast<std::uint64_t>(x));
        }
      }
    }
    t.expect(got == want, "bit pattern mismatch");
  }
  return t.outcome("100 scenes");
}

// AC9 -----------------------------------------------------------------------
Outcome negative_control() {
  Tally t;
  std::string text;
  const int code = run_cli({"check", "--all-pairs", "--format", "json", kSeparated}, &text);
  t.expect(code == 0, "exit status " + std::to_string(code) + ", want 0");
  const json doc = json::parse(text);
  t.expect(doc["verdict"] == false, "verdict");
  t.expect(doc["pairs"].size() == 49, "pair count " + std::to_string(doc["pairs"].size()));
  double closest = std::numeric_limits<double>::infinity();
  for (const json& p : doc["pairs"]) {
    t.expect(p["colliding"] == false, "colliding pair");
    closest = std::min(closest, p["squared_distance"].get<double>());
  }
  return t.outcome("49 disjoint pairs, closest squared distance " + num(closest));
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 table3 scene reproduction", table3_reproduction},
      {"AC2 point inner product distance identity", eq2_identity},
      {"AC3 null basis relations", null_basis},
      {"AC4 point/segment and segment/segment distance cases", nine_cases},
      {"AC5 degeneracy equalities", degeneracy},
      {"AC6 collision predicate equivalence", predicates},
      {"AC7 robot fold and pairwise laws", fold_laws},
      {"AC8 scene round trip", round_trip},
      {"AC9 separated scene negative control", negative_control},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.passed;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
