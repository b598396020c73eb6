#include "ppx/puzzles/superply.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "ppx/core/errors.hpp"

namespace ppx::superply {

bool Hint::matches(int row, int col) const {
  const int q = quantity == Quantity::Sum ? row + col : row * col;
  switch (relation) {
    case Relation::Less: return q < param;
    case Relation::Greater: return q > param;
    case Relation::Equal: return q == param;
    case Relation::ContainsDigit:
      return std::to_string(q).find(static_cast<char>('0' + param)) != std::string::npos;
  }
  return false;
}

std::string Hint::text() const {
  std::string out = quantity == Quantity::Sum ? "sum" : "product";
  switch (relation) {
    case Relation::Less: return out + " < " + std::to_string(param);
    case Relation::Greater: return out + " > " + std::to_string(param);
    case Relation::Equal: return out + " = " + std::to_string(param);
    case Relation::ContainsDigit: return out + " contains digit " + std::to_string(param);
  }
  return out;
}

bool SuperplyBoard::full() const {
  return std::none_of(grid.begin(), grid.end(), [](int v) { return v == 0; });
}

std::vector<Cell> hint_cells(const SuperplyBoard& board) { return hint_cells(board, board.hint); }

std::vector<Cell> hint_cells(const SuperplyBoard& board, const Hint& hint) {
  std::vector<Cell> cells;
  for (int r = 1; r <= board.n; ++r) {
    for (int c = 1; c <= board.n; ++c) {
      if (board.at(r, c) == 0 && hint.matches(r, c)) cells.push_back({r, c});
    }
  }
  return cells;
}

namespace {

constexpr int kDirs[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}};

bool is_source(int player_value, int r, int c) { return player_value == 1 ? c == 1 : r == 1; }

bool is_sink(int player_value, int n, int r, int c) { return player_value == 1 ? c == n : r == n; }

}  // namespace

bool has_path(const SuperplyBoard& board, int player_value) {
  return completion_distance(board, player_value) == 0;
}

int completion_distance(const SuperplyBoard& board, int player_value) {
  const int n = board.n;
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n * n), inf);
  auto cost = [&](int r, int c) {
    const int v = board.at(r, c);
    return v == player_value ? 0 : v == 0 ? 1 : -1;
  };
  auto idx = [n](int r, int c) { return static_cast<std::size_t>((r - 1) * n + (c - 1)); };
  std::deque<std::pair<int, int>> queue;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (!is_source(player_value, r, c)) continue;
      const int w = cost(r, c);
      if (w < 0) continue;
      dist[idx(r, c)] = w;
      if (w == 0) {
        queue.emplace_front(r, c);
      } else {
        queue.emplace_back(r, c);
      }
    }
  }
  // 0-1 BFS; entries may be stale, so re-check distances on pop.
  int best = inf;
  while (!queue.empty()) {
    auto [r, c] = queue.front();
    queue.pop_front();
    const int d = dist[idx(r, c)];
    if (d >= best) continue;
    if (is_sink(player_value, n, r, c)) {
      best = d;
      continue;
    }
    for (const auto& dir : kDirs) {
      const int nr = r + dir[0];
      const int nc = c + dir[1];
      if (!board.in_range(nr, nc)) continue;
      const int w = cost(nr, nc);
      if (w < 0 || d + w >= dist[idx(nr, nc)]) continue;
      dist[idx(nr, nc)] = d + w;
      if (w == 0) {
        queue.emplace_front(nr, nc);
      } else {
        queue.emplace_back(nr, nc);
      }
    }
  }
  return best == inf ? -1 : best;
}

Hint draw_hint(const SuperplyBoard& board, CounterRng& rng) {
  const int n = board.n;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Hint h;
    h.quantity = rng.chance(0.5) ? Quantity::Sum : Quantity::Product;
    h.relation = static_cast<Relation>(rng.below(4));
    const int hi = h.quantity == Quantity::Sum ? 2 * n : n * n;
    const int lo = h.quantity == Quantity::Sum ? 2 : 1;
    switch (h.relation) {
      case Relation::Less: h.param = static_cast<int>(rng.between(lo + 1, hi)); break;
      case Relation::Greater: h.param = static_cast<int>(rng.between(lo, hi - 1)); break;
      case Relation::Equal: h.param = static_cast<int>(rng.between(lo, hi)); break;
      case Relation::ContainsDigit: h.param = static_cast<int>(rng.between(0, 9)); break;
    }
    if (!hint_cells(board, h).empty()) return h;
  }
  // Always satisfiable: every 1-indexed cell has row + col > 1.
  return Hint{Quantity::Sum, Relation::Greater, 1};
}

SuperplyBoard start(int n, CounterRng rng) {
  if (n < 2) fail(ErrorCode::InvalidTemplate, "Superply side must be at least 2");
  SuperplyBoard board;
  board.n = n;
  board.grid.assign(static_cast<std::size_t>(n * n), 0);
  board.rng = rng;
  board.hint = draw_hint(board, board.rng);
  return board;
}

}  // namespace ppx::superply
