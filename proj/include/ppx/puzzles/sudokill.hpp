#pragma once

#include <optional>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::sudokill {

// Cells are 0-indexed (row, col).
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

struct Placement {
  int row = 0;
  int col = 0;
  int value = 0;
  bool operator==(const Placement&) const = default;
};

struct Board {
  int n = 0;              // side length; a perfect square
  std::vector<int> grid;  // row-major, 0 = empty
  std::optional<Placement> last_move;

  int at(int row, int col) const { return grid[static_cast<std::size_t>(row * n + col)]; }
  int box_side() const;
  bool in_range(int row, int col) const { return row >= 0 && col >= 0 && row < n && col < n; }
  int empty_count() const;

  static Board from_rows(const std::vector<std::vector<int>>& rows,
                         std::optional<Placement> last = std::nullopt);

  bool operator==(const Board&) const = default;
};

// Empty cells sharing the last move's row or column; every empty cell when
// there is no last move or that set is empty.
std::vector<Cell> allowed_cells(const Board& board);

// True iff value is absent from the cell's row, column and subgrid.
bool is_valid(const Board& board, int row, int col, int value);

// (allowed cell, valid value) pairs in row-major, ascending-value order.
std::vector<Placement> legal_placements(const Board& board);

std::size_t count_legal_placements(const Board& board);

// Solved grid with `empty_cells` cells removed. n must be a perfect square.
Board generate(int n, int empty_cells, CounterRng& rng);

}  // namespace ppx::sudokill
