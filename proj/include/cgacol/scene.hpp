#pragma once

// Plain-text robot scenes, one record per line, millimeters:
//
//   # comment
//   robot <name>
//   capsule <sx> <sy> <sz> <ex> <ey> <ez> <r>
//   ball <cx> <cy> <cz> <r>
//
// Component lines attach, in order, to the most recent `robot`.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgacol/collision.hpp"

namespace cgacol {

struct Scene {
  std::vector<RobotModel> robots;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Parse failure with a 1-based location. what() reads
/// "line L, column C: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Parses and validates a scene: finite numbers, radii >= 0, unique robot
/// names, every robot with at least one component, at least one robot.
Scene parse_scene(std::string_view text);

/// Reads and parses a scene file. Throws std::runtime_error when the file
/// cannot be read.
Scene load_scene(const std::string& path);

/// Shortest round-trip decimal form, so parse_scene(serialize_scene(s)) == s
/// bit for bit.
std::string serialize_scene(const Scene& scene);

/// Text of the bundled two-robot scene (six r = 15 capsules and an r = 16
/// end-effector ball per robot). Robot 1's end effector sits on the axis of
/// Robot 2's last link.
std::string_view table3_scene_text();

}  // namespace cgacol
