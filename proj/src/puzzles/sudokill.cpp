#include "ppx/puzzles/sudokill.hpp"

#include <cmath>
#include <numeric>

#include "ppx/core/errors.hpp"

namespace ppx::sudokill {

int Board::box_side() const {
  int b = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return b * b == n ? b : 0;
}

int Board::empty_count() const {
  int count = 0;
  for (int v : grid) count += v == 0;
  return count;
}

Board Board::from_rows(const std::vector<std::vector<int>>& rows, std::optional<Placement> last) {
  Board b;
  b.n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != b.n) fail(ErrorCode::InvalidInput, "grid is not square");
    b.grid.insert(b.grid.end(), row.begin(), row.end());
  }
  if (b.box_side() == 0) fail(ErrorCode::InvalidInput, "side is not a perfect square");
  b.last_move = last;
  return b;
}

std::vector<Cell> allowed_cells(const Board& board) {
  std::vector<Cell> cells;
  if (board.last_move) {
    const int lr = board.last_move->row;
    const int lc = board.last_move->col;
    for (int r = 0; r < board.n; ++r) {
      for (int c = 0; c < board.n; ++c) {
        if ((r == lr || c == lc) && board.at(r, c) == 0) cells.push_back({r, c});
      }
    }
    if (!cells.empty()) return cells;
  }
  for (int r = 0; r < board.n; ++r) {
    for (int c = 0; c < board.n; ++c) {
      if (board.at(r, c) == 0) cells.push_back({r, c});
    }
  }
  return cells;
}

bool is_valid(const Board& board, int row, int col, int value) {
  if (value < 1 || value > board.n) return false;
  for (int i = 0; i < board.n; ++i) {
    if (board.at(row, i) == value || board.at(i, col) == value) return false;
  }
  const int b = board.box_side();
  const int r0 = row / b * b;
  const int c0 = col / b * b;
  for (int r = r0; r < r0 + b; ++r) {
    for (int c = c0; c < c0 + b; ++c) {
      if (board.at(r, c) == value) return false;
    }
  }
  return true;
}

std::vector<Placement> legal_placements(const Board& board) {
  std::vector<Placement> moves;
  for (const Cell& cell : allowed_cells(board)) {
    for (int v = 1; v <= board.n; ++v) {
      if (is_valid(board, cell.row, cell.col, v)) moves.push_back({cell.row, cell.col, v});
    }
  }
  return moves;
}

std::size_t count_legal_placements(const Board& board) {
  std::size_t count = 0;
  for (const Cell& cell : allowed_cells(board)) {
    for (int v = 1; v <= board.n; ++v) count += is_valid(board, cell.row, cell.col, v);
  }
  return count;
}

Board generate(int n, int empty_cells, CounterRng& rng) {
  Board board;
  board.n = n;
  const int b = board.box_side();
  if (b == 0) fail(ErrorCode::InvalidTemplate, "SudoKill side must be a perfect square");
  if (empty_cells > n * n) fail(ErrorCode::InvalidTemplate, "SudoKill empty_cells exceeds grid");

  // Canonical solved pattern, then validity-preserving shuffles.
  std::vector<int> digits(static_cast<std::size_t>(n));
  std::iota(digits.begin(), digits.end(), 1);
  rng.shuffle(digits);

  auto shuffled_lines = [&] {
    std::vector<int> groups(static_cast<std::size_t>(b));
    std::iota(groups.begin(), groups.end(), 0);
    rng.shuffle(groups);
    std::vector<int> lines;
    for (int g : groups) {
      std::vector<int> inner(static_cast<std::size_t>(b));
      std::iota(inner.begin(), inner.end(), 0);
      rng.shuffle(inner);
      for (int i : inner) lines.push_back(g * b + i);
    }
    return lines;
  };
  const std::vector<int> rows = shuffled_lines();
  const std::vector<int> cols = shuffled_lines();
  const bool transpose = rng.chance(0.5);

  board.grid.assign(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int rr = rows[static_cast<std::size_t>(r)];
      int cc = cols[static_cast<std::size_t>(c)];
      if (transpose) std::swap(rr, cc);
      const int pattern = (b * (rr % b) + rr / b + cc) % n;
      board.grid[static_cast<std::size_t>(r * n + c)] = digits[static_cast<std::size_t>(pattern)];
    }
  }

  std::vector<int> cells(static_cast<std::size_t>(n * n));
  std::iota(cells.begin(), cells.end(), 0);
  rng.shuffle(cells);
  for (int i = 0; i < empty_cells; ++i) board.grid[static_cast<std::size_t>(cells[static_cast<std::size_t>(i)])] = 0;
  return board;
}

}  // namespace ppx::sudokill
