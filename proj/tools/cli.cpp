#include "cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <cmath>
#include <optional>
#include <sstream>

#include "cgacol/collision.hpp"
#include "cgacol/error.hpp"
#include "cgacol/scene.hpp"
#include "cgacol/selftest.hpp"

namespace cgacol::cli {

namespace {

using nlohmann::json;

// Human-readable numbers: 6 significant digits.
std::string num6(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

struct LabeledReport {
  std::string first;
  std::string second;
  CollisionReport report;
};

void print_text(const std::vector<LabeledReport>& reports, const CliConfig& cfg, bool verdict,
                std::ostream& out) {
  out << "scene: " << cfg.scene_path << '\n';
  out << "mode: " << (cfg.skip_adjacent ? "self-collision (adjacent links skipped)" : "two-robot")
      << '\n';
  out << "verdict: " << (verdict ? "COLLISION" : "no collision") << '\n';
  for (const LabeledReport& lr : reports) {
    const auto hits = lr.report.colliding_pairs();
    out << lr.first << " vs " << lr.second << ": " << lr.report.pairs.size()
        << " pairs evaluated, " << hits.size() << " colliding\n";
    for (const PairEvidence& p : cfg.report_all_pairs ? lr.report.pairs : hits) {
      out << "  " << lr.first << '[' << p.i << "] " << lr.second << '[' << p.j << "]"
          << "  squared_distance=" << num6(p.squared_distance)
          << "  threshold=" << num6(p.squared_threshold)
          << (p.colliding ? "  COLLIDING" : "  disjoint") << '\n';
    }
  }
}

void print_json(const std::vector<LabeledReport>& reports, const CliConfig& cfg, bool verdict,
                std::ostream& out) {
  json pairs = json::array();
  for (const LabeledReport& lr : reports) {
    for (const PairEvidence& p : lr.report.pairs) {
      if (!cfg.report_all_pairs && !p.colliding) continue;
      pairs.push_back({{"first", lr.first},
                       {"second", lr.second},
                       {"i", p.i},
                       {"j", p.j},
                       {"squared_distance", p.squared_distance},
                       {"threshold", p.squared_threshold},
                       {"colliding", p.colliding}});
    }
  }
  const json doc{{"scene", cfg.scene_path},
                 {"skip_adjacent", cfg.skip_adjacent},
                 {"all_pairs", cfg.report_all_pairs},
                 {"verdict", verdict},
                 {"pairs", pairs}};
  out << doc.dump(2) << '\n';
}

// Loads the scene or reports the problem on `err`; nullopt means exit 2.
std::optional<Scene> load(const CliConfig& cfg, std::ostream& err) {
  try {
    return load_scene(cfg.scene_path);
  } catch (const ParseError& e) {
    err << cfg.scene_path << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << e.what() << '\n';
  }
  return std::nullopt;
}

}  // namespace

int run_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto scene = load(cfg, err);
  if (!scene) return kExitInput;

  std::vector<LabeledReport> reports;
  if (cfg.skip_adjacent) {
    for (const RobotModel& r : scene->robots) {
      reports.push_back({r.name, r.name, robot_self_collide(r, true)});
    }
  } else {
    if (scene->robots.size() != 2) {
      err << cfg.scene_path << ": check needs exactly 2 robots, found " << scene->robots.size()
          << " (use --skip-adjacent for a self-collision check)\n";
      return kExitInput;
    }
    const RobotModel& a = scene->robots[0];
    const RobotModel& b = scene->robots[1];
    reports.push_back({a.name, b.name, robots_collide(a, b)});
  }

  bool verdict = false;
  for (const LabeledReport& lr : reports) verdict = verdict || lr.report.verdict;
  if (cfg.output_format == OutputFormat::Json) {
    print_json(reports, cfg, verdict, out);
  } else {
    print_text(reports, cfg, verdict, out);
  }
  return verdict ? kExitCollision : kExitOk;
}

int run_dist(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto scene = load(cfg, err);
  if (!scene) return kExitInput;

  // One robot: its own matrix. Several: every unordered pair of robots.
  std::vector<std::pair<const RobotModel*, const RobotModel*>> jobs;
  const auto& robots = scene->robots;
  if (robots.size() == 1) jobs.emplace_back(&robots[0], &robots[0]);
  for (std::size_t a = 0; a < robots.size(); ++a) {
    for (std::size_t b = a + 1; b < robots.size(); ++b) jobs.emplace_back(&robots[a], &robots[b]);
  }

  json matrices = json::array();
  for (const auto& [r1, r2] : jobs) {
    const std::vector<double> d2 = distance_matrix(*r1, *r2);
    const std::size_t cols = r2->components.size();
    if (cfg.output_format == OutputFormat::Text) {
      out << r1->name << " x " << r2->name << " (squared mm^2 / mm)\n";
    }
    json entries = json::array();
    for (std::size_t i = 0; i < r1->components.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const double sq = d2[i * cols + j];
        const double dist = std::sqrt(sq);
        if (cfg.output_format == OutputFormat::Text) {
          out << "  " << r1->name << '[' << i << "] " << r2->name << '[' << j << "]  "
              << "squared_distance=" << num6(sq) << "  distance=" << num6(dist) << '\n';
        } else {
          entries.push_back({{"i", i}, {"j", j}, {"squared_distance", sq}, {"distance", dist}});
        }
      }
    }
    matrices.push_back({{"first", r1->name},
                        {"second", r2->name},
                        {"rows", r1->components.size()},
                        {"cols", cols},
                        {"entries", entries}});
  }
  if (cfg.output_format == OutputFormat::Json) {
    out << json{{"scene", cfg.scene_path}, {"matrices", matrices}}.dump(2) << '\n';
  }
  return kExitOk;
}

int run_selftest(std::ostream& out) {
  return cgacol::run_selftest(out) ? kExitOk : kExitCollision;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collision checks for robots built from balls and capsules"};
  app.name("cgacol");
  app.require_subcommand(1);

  CliConfig cfg;
  std::string positional_scene;
  std::string format = "text";

  auto add_scene_options = [&](CLI::App* sub) {
    sub->add_option("path", positional_scene, "Scene file");
    sub->add_option("--scene", cfg.scene_path, "Scene file");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "Collision verdict with per-pair evidence");
  add_scene_options(check);
  check->add_flag("--skip-adjacent", cfg.skip_adjacent,
                  "Self-collision check of each robot, skipping joint-adjacent links");
  check->add_flag("--all-pairs", cfg.report_all_pairs,
                  "List every evaluated pair, not only colliding ones");

  CLI::App* dist = app.add_subcommand("dist", "Pairwise squared center distance matrix");
  add_scene_options(dist);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the embedded identity checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (selftest->parsed()) return run_selftest(out);

  if (!positional_scene.empty() && !cfg.scene_path.empty() && positional_scene != cfg.scene_path) {
    err << "conflicting scene paths '" << positional_scene << "' and '" << cfg.scene_path << "'\n";
    return kExitInput;
  }
  if (cfg.scene_path.empty()) cfg.scene_path = positional_scene;
  if (cfg.scene_path.empty()) {
    err << "a scene file is required\n";
    return kExitInput;
  }
  cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  try {
    if (check->parsed()) {
      cfg.subcommand = Subcommand::Check;
      return run_check(cfg, out, err);
    }
    cfg.subcommand = Subcommand::Dist;
    return run_dist(cfg, out, err);
  } catch (const ValidationError& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace cgacol::cli
