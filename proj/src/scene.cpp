#include "cgacol/scene.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cgacol/error.hpp"

namespace cgacol {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

double parse_number(const Token& tok, std::size_t line) {
  double value = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  // from_chars rejects a leading '+'; accept it as scene files are hand-written.
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, tok.column, "invalid number '" + std::string(tok.text) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, tok.column, "non-finite number '" + std::string(tok.text) + "'");
  }
  return value;
}

void format_number(std::string& out, double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), ptr);
}

constexpr std::string_view kTable3 =
    "# Two six-link arms with end effectors; links are r = 15 capsules,\n"
    "# end effectors r = 16 balls. Coordinates in mm.\n"
    "robot robot1\n"
    "capsule 0 0 0 0 0 65 15\n"
    "capsule 0 0 65 0 0 130 15\n"
    "capsule 0 0 130 35 0 130 15\n"
    "capsule 35 0 130 70 0 130 15\n"
    "capsule 70 0 130 70 45 130 15\n"
    "capsule 70 45 130 70 90 130 15\n"
    "ball 70 90 130 16\n"
    "robot robot2\n"
    "capsule 0 120 0 0 120 65 15\n"
    "capsule 0 120 65 0 120 130 15\n"
    "capsule 0 120 130 35 120 130 15\n"
    "capsule 35 120 130 70 120 130 15\n"
    "capsule 70 120 130 70 100 130 15\n"
    "capsule 70 100 130 70 30 130 15\n"
    "ball 70 30 130 16\n";

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

Scene parse_scene(std::string_view text) {
  Scene scene;
  std::set<std::string, std::less<>> names;
  std::size_t robot_line = 0;
  std::size_t line_no = 0;

  auto close_robot = [&] {
    if (!scene.robots.empty() && scene.robots.back().components.empty()) {
      throw ParseError(robot_line, 1,
                       "robot '" + scene.robots.back().name + "' has no components");
    }
  };

  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();

    if (head.text == "robot") {
      if (tokens.size() != 2) {
        const std::size_t col = tokens.size() < 2 ? line.size() + 1 : tokens[2].column;
        throw ParseError(line_no, col, "expected 'robot <name>'");
      }
      close_robot();
      const std::string name(tokens[1].text);
      if (!names.insert(name).second) {
        throw ParseError(line_no, tokens[1].column, "duplicate robot name '" + name + "'");
      }
      scene.robots.push_back({name, {}});
      robot_line = line_no;
      continue;
    }

    const bool is_capsule = head.text == "capsule";
    if (!is_capsule && head.text != "ball") {
      throw ParseError(line_no, head.column, "unknown record '" + std::string(head.text) + "'");
    }
    const std::size_t expected = is_capsule ? 7 : 4;
    if (tokens.size() != expected + 1) {
      const std::size_t col =
          tokens.size() < expected + 1 ? line.size() + 1 : tokens[expected + 1].column;
      throw ParseError(line_no, col,
                       std::string(head.text) + " expects " + std::to_string(expected) +
                           " numbers, got " + std::to_string(tokens.size() - 1));
    }
    if (scene.robots.empty()) {
      throw ParseError(line_no, head.column, "component before any 'robot' line");
    }
    std::array<double, 7> v{};
    for (std::size_t k = 0; k < expected; ++k) v[k] = parse_number(tokens[k + 1], line_no);
    const double radius = v[expected - 1];
    if (radius < 0.0) throw ParseError(line_no, tokens[expected].column, "negative radius");

    auto& components = scene.robots.back().components;
    if (is_capsule) {
      components.emplace_back(Capsule{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, radius});
    } else {
      components.emplace_back(ClosedBall{{v[0], v[1], v[2]}, radius});
    }
  }

  if (scene.robots.empty()) throw ParseError(std::max<std::size_t>(line_no, 1), 1, "no robots");
  close_robot();
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string serialize_scene(const Scene& scene) {
  std::string out;
  for (const RobotModel& robot : scene.robots) {
    out += "robot ";
    out += robot.name;
    out += '\n';
    for (const Component& c : robot.components) {
      if (const auto* b = std::get_if<ClosedBall>(&c)) {
        out += "ball";
        for (double v : {b->center.x, b->center.y, b->center.z, b->radius}) {
          out += ' ';
          format_number(out, v);
        }
      } else {
        const auto& k = std::get<Capsule>(c);
        out += "capsule";
        for (double v : {k.axis.start.x, k.axis.start.y, k.axis.start.z, k.axis.end.x,
                         k.axis.end.y, k.axis.end.z, k.radius}) {
          out += ' ';
          format_number(out, v);
        }
      }
      out += '\n';
    }
  }
  return out;
}

std::string_view table3_scene_text() { return kTable3; }

}  // namespace cgacol
