#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::tidytower {

// Front-face colors in clockwise order; one rotation advances R->Y->B->G->R.
enum class Color : std::uint8_t { R = 0, Y = 1, B = 2, G = 3 };

inline Color advance(Color c, int steps = 1) {
  return static_cast<Color>((static_cast<int>(c) + steps % 4 + 4) % 4);
}

// Positions are 1-based, position 1 is the bottom cube. Without a hold the
// cube at `position` and everything above it rotate; with a hold the cubes
// 1..position rotate and the cubes from position+1 upward stay put.
struct Rotation {
  int position = 1;
  std::optional<int> hold;
  bool operator==(const Rotation&) const = default;
};

struct Tower {
  std::vector<Color> colors;  // index 0 = bottom
  int moves_used = 0;
  int budget = 0;

  int length() const { return static_cast<int>(colors.size()); }
  bool operator==(const Tower&) const = default;
};

Tower rotate(const Tower& tower, int position);
Tower rotate_hold(const Tower& tower, int position, int hold);
Tower apply(const Tower& tower, const Rotation& move);
bool is_solved(const Tower& tower);

std::string to_string(const std::vector<Color>& colors);
std::vector<Color> parse_colors(std::string_view text);

// Shortest rotation sequence that makes the tower tidy. Both operations move
// exactly one adjacent-pair difference (c[i+1]-c[i] mod 4) by +-1 and leave
// the others alone, so the configuration graph is a product of 4-cycles and
// a breadth-first search per pair yields a globally minimal sequence.
std::vector<Rotation> minimal_solution(const std::vector<Color>& colors);

// Random non-tidy tower with budget = optimal move count.
Tower generate(int length, CounterRng& rng);

}  // namespace ppx::tidytower
