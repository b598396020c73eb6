#pragma once

#include <string>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::superply {

// Cells are 1-indexed (row, col).
struct Cell {
  int row = 1;
  int col = 1;
  auto operator<=>(const Cell&) const = default;
};

struct Claim {
  int row = 1;
  int col = 1;
  bool operator==(const Claim&) const = default;
};

enum class Quantity { Sum, Product };
enum class Relation { Less, Greater, Equal, ContainsDigit };

struct Hint {
  Quantity quantity = Quantity::Sum;
  Relation relation = Relation::Less;
  int param = 0;

  bool matches(int row, int col) const;
  std::string text() const;
  bool operator==(const Hint&) const = default;
};

struct SuperplyBoard {
  int n = 6;
  std::vector<int> grid;  // row-major, values 0/1/2
  Hint hint;
  CounterRng rng;
  int consecutive_passes = 0;

  int at(int row, int col) const {
    return grid[static_cast<std::size_t>((row - 1) * n + (col - 1))];
  }
  int& at(int row, int col) { return grid[static_cast<std::size_t>((row - 1) * n + (col - 1))]; }
  bool in_range(int row, int col) const { return row >= 1 && col >= 1 && row <= n && col <= n; }
  bool full() const;
  bool operator==(const SuperplyBoard&) const = default;
};

std::vector<Cell> hint_cells(const SuperplyBoard& board);
std::vector<Cell> hint_cells(const SuperplyBoard& board, const Hint& hint);

// Player 1 (value 1) connects left to right, player 2 (value 2) connects
// top to bottom; adjacency is 8-directional.
bool has_path(const SuperplyBoard& board, int player_value);

// Fewest empty cells the player must still claim to complete a path;
// -1 when blocked.
int completion_distance(const SuperplyBoard& board, int player_value);

// Fresh hint with at least one satisfiable unoccupied cell (when any cell
// is empty).
Hint draw_hint(const SuperplyBoard& board, CounterRng& rng);

SuperplyBoard start(int n, CounterRng rng);

}  // namespace ppx::superply
