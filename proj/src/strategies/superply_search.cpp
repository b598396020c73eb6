#include <limits>

#include "ppx/core/errors.hpp"
#include "ppx/strategies/solvers.hpp"

namespace ppx::strategies {

namespace {

constexpr int kWin = 1000;

// Distance to completion, with a blocked side counted as very far.
int distance_or_far(const superply::SuperplyBoard& board, int value) {
  const int d = superply::completion_distance(board, value);
  return d < 0 ? board.n * board.n + 1 : d;
}

}  // namespace

int superply_eval(const superply::SuperplyBoard& board, int player_value) {
  return distance_or_far(board, 3 - player_value) - distance_or_far(board, player_value);
}

superply::Claim superply_search(const superply::SuperplyBoard& board, int player_value, int depth) {
  const auto cells = superply::hint_cells(board);
  if (cells.empty()) fail(ErrorCode::NoLegalMoves, "no cell satisfies the hint");
  const int other = 3 - player_value;
  int best = std::numeric_limits<int>::min();
  superply::Claim choice{cells.front().row, cells.front().col};
  for (const auto& cell : cells) {
    superply::SuperplyBoard next = board;
    next.at(cell.row, cell.col) = player_value;
    if (superply::has_path(next, player_value)) return {cell.row, cell.col};
    int value = superply_eval(next, player_value);
    if (depth >= 2) {
      int worst = std::numeric_limits<int>::max();
      for (int r = 1; r <= next.n && worst > -kWin; ++r) {
        for (int c = 1; c <= next.n; ++c) {
          if (next.at(r, c) != 0) continue;
          superply::SuperplyBoard reply = next;
          reply.at(r, c) = other;
          const int v = superply::has_path(reply, other) ? -kWin : superply_eval(reply, player_value);
          if (v < worst) worst = v;
          if (worst <= -kWin) break;
        }
      }
      if (worst != std::numeric_limits<int>::max()) value = worst;
    }
    if (value > best) {
      best = value;
      choice = {cell.row, cell.col};
    }
  }
  return choice;
}

}  // namespace ppx::strategies
