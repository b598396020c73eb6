#include "ppx/puzzles/cardnim.hpp"

#include <algorithm>
#include <numeric>

#include "ppx/core/errors.hpp"

namespace ppx::cardnim {

std::vector<int> legal_cards(const NimState& state, int seat) {
  std::vector<int> cards;
  for (int v : state.hands[static_cast<std::size_t>(seat)]) {
    if (v <= state.stones) cards.push_back(v);
  }
  return cards;
}

void play(NimState& state, int seat, int value) {
  auto& hand = state.hands[static_cast<std::size_t>(seat)];
  auto it = std::find(hand.begin(), hand.end(), value);
  if (it == hand.end()) fail(ErrorCode::InvalidMove, "card " + std::to_string(value) + " not in hand");
  if (value > state.stones) {
    fail(ErrorCode::InvalidMove, "card " + std::to_string(value) + " exceeds the " +
                                     std::to_string(state.stones) + " stones left");
  }
  hand.erase(it);
  state.stones -= value;
}

NimState generate(bool easy, int num_cards, int max_card, int max_stones, CounterRng& rng) {
  if (num_cards > max_card) fail(ErrorCode::InvalidTemplate, "CardNim needs num_cards <= max_card");
  std::vector<int> hand;
  if (easy) {
    hand.resize(static_cast<std::size_t>(num_cards));
    std::iota(hand.begin(), hand.end(), 1);
  } else {
    std::vector<int> pool(static_cast<std::size_t>(max_card));
    std::iota(pool.begin(), pool.end(), 1);
    rng.shuffle(pool);
    hand.assign(pool.begin(), pool.begin() + num_cards);
    std::sort(hand.begin(), hand.end());
  }
  const int lo = std::min(max_stones, hand.back());
  NimState state;
  state.stones = static_cast<int>(rng.between(lo, max_stones));
  state.initial_stones = state.stones;
  state.hands = {hand, hand};
  return state;
}

}  // namespace ppx::cardnim
