#include "ppx/puzzles/tidytower.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "ppx/core/errors.hpp"

namespace ppx::tidytower {

namespace {

void check_budget(const Tower& tower) {
  if (tower.moves_used >= tower.budget) fail(ErrorCode::BudgetExhausted, "move budget exhausted");
}

void check_position(const Tower& tower, int position) {
  if (position < 1 || position > tower.length()) {
    fail(ErrorCode::IndexOutOfRange, "position " + std::to_string(position) + " outside 1.." +
                                         std::to_string(tower.length()));
  }
}

int diff(Color lower, Color upper) {
  return (static_cast<int>(upper) - static_cast<int>(lower) + 4) % 4;
}

}  // namespace

Tower rotate(const Tower& tower, int position) {
  check_position(tower, position);
  check_budget(tower);
  Tower next = tower;
  for (int i = position - 1; i < next.length(); ++i) next.colors[static_cast<std::size_t>(i)] = advance(next.colors[static_cast<std::size_t>(i)]);
  ++next.moves_used;
  return next;
}

Tower rotate_hold(const Tower& tower, int position, int hold) {
  check_position(tower, position);
  if (hold <= position) fail(ErrorCode::HoldNotAbove, "hold must be above the rotated cube");
  check_position(tower, hold);
  check_budget(tower);
  Tower next = tower;
  for (int i = 0; i < position; ++i) next.colors[static_cast<std::size_t>(i)] = advance(next.colors[static_cast<std::size_t>(i)]);
  ++next.moves_used;
  return next;
}

Tower apply(const Tower& tower, const Rotation& move) {
  return move.hold ? rotate_hold(tower, move.position, *move.hold) : rotate(tower, move.position);
}

bool is_solved(const Tower& tower) {
  return std::adjacent_find(tower.colors.begin(), tower.colors.end(),
                            std::not_equal_to<>()) == tower.colors.end();
}

std::string to_string(const std::vector<Color>& colors) {
  static constexpr std::array<char, 4> kLetters = {'R', 'Y', 'B', 'G'};
  std::string out;
  for (Color c : colors) out.push_back(kLetters[static_cast<std::size_t>(c)]);
  return out;
}

std::vector<Color> parse_colors(std::string_view text) {
  std::vector<Color> colors;
  for (char ch : text) {
    switch (ch) {
      case 'R': colors.push_back(Color::R); break;
      case 'Y': colors.push_back(Color::Y); break;
      case 'B': colors.push_back(Color::B); break;
      case 'G': colors.push_back(Color::G); break;
      default: fail(ErrorCode::InvalidInput, std::string("unknown color '") + ch + "'");
    }
  }
  return colors;
}

std::vector<Rotation> minimal_solution(const std::vector<Color>& colors) {
  // Shortest path on Z4 under {+1, -1} from every residue to 0.
  std::array<int, 4> dist{};
  std::array<int, 4> first_step{};  // +1 or -1
  dist.fill(-1);
  dist[0] = 0;
  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    int r = frontier.front();
    frontier.pop();
    for (int s : {+1, -1}) {
      int prev = ((r - s) % 4 + 4) % 4;  // applying s at prev reaches r
      if (dist[static_cast<std::size_t>(prev)] < 0) {
        dist[static_cast<std::size_t>(prev)] = dist[static_cast<std::size_t>(r)] + 1;
        first_step[static_cast<std::size_t>(prev)] = s;
        frontier.push(prev);
      }
    }
  }

  std::vector<Rotation> moves;
  const int length = static_cast<int>(colors.size());
  for (int i = 0; i + 1 < length; ++i) {
    // Pair (i, i+1) in 0-based terms: rotating at position i+2 adds one,
    // rotating at position i+1 while holding i+2 subtracts one.
    int d = diff(colors[static_cast<std::size_t>(i)], colors[static_cast<std::size_t>(i + 1)]);
    while (d != 0) {
      const int s = first_step[static_cast<std::size_t>(d)];
      if (s > 0) {
        moves.push_back({i + 2, std::nullopt});
      } else {
        moves.push_back({i + 1, i + 2});
      }
      d = ((d + s) % 4 + 4) % 4;
    }
  }
  return moves;
}

Tower generate(int length, CounterRng& rng) {
  if (length < 2) fail(ErrorCode::InvalidTemplate, "TidyTower length must be at least 2");
  Tower tower;
  do {
    tower.colors.clear();
    for (int i = 0; i < length; ++i) tower.colors.push_back(static_cast<Color>(rng.below(4)));
  } while (is_solved(tower));
  tower.budget = static_cast<int>(minimal_solution(tower.colors).size());
  return tower;
}

}  // namespace ppx::tidytower
