#include <algorithm>

#include "ppx/core/errors.hpp"
#include "ppx/strategies/solvers.hpp"

namespace ppx::strategies {

namespace {

std::string key_of(int stones, const std::vector<int>& mover, const std::vector<int>& other) {
  std::string key = std::to_string(stones) + ':';
  for (int v : mover) key += std::to_string(v) + ',';
  key += '|';
  for (int v : other) key += std::to_string(v) + ',';
  return key;
}

std::vector<int> without(const std::vector<int>& hand, std::size_t index) {
  std::vector<int> out = hand;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

}  // namespace

bool CardNimSolver::solve(int stones, const std::vector<int>& mover, const std::vector<int>& other) {
  const std::string key = key_of(stones, mover, other);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool win = false;
  for (std::size_t i = 0; i < mover.size() && !win; ++i) {
    if (i > 0 && mover[i] == mover[i - 1]) continue;
    const int v = mover[i];
    if (v > stones) break;  // hands are sorted
    win = v == stones || !solve(stones - v, other, without(mover, i));
  }
  memo_.emplace(key, win);
  return win;
}

bool CardNimSolver::wins(const cardnim::NimState& state, int seat) {
  if (state.hands[0].size() + state.hands[1].size() > static_cast<std::size_t>(kCap)) {
    fail(ErrorCode::CapExceeded, "too many cards for the CardNim solver");
  }
  auto mover = state.hands[static_cast<std::size_t>(seat)];
  auto other = state.hands[static_cast<std::size_t>(1 - seat)];
  std::sort(mover.begin(), mover.end());
  std::sort(other.begin(), other.end());
  return solve(state.stones, mover, other);
}

int CardNimSolver::best_card(const cardnim::NimState& state, int seat) {
  auto cards = cardnim::legal_cards(state, seat);
  if (cards.empty()) fail(ErrorCode::NoLegalMoves, "no playable card");
  std::sort(cards.begin(), cards.end());
  cards.erase(std::unique(cards.begin(), cards.end()), cards.end());
  for (int v : cards) {
    if (v == state.stones) return v;
    cardnim::NimState next = state;
    cardnim::play(next, seat, v);
    if (!wins(next, 1 - seat)) return v;
  }
  return cards.front();
}

}  // namespace ppx::strategies
