#pragma once

#include <array>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::cardnim {

struct PlayCard {
  int value = 0;
  bool operator==(const PlayCard&) const = default;
};

struct NimState {
  int stones = 0;
  std::array<std::vector<int>, 2> hands;  // sorted ascending, seat 0 = P1
  int initial_stones = 0;

  bool operator==(const NimState&) const = default;
};

// Cards of `seat` that can be played (value <= stones), with multiplicity.
std::vector<int> legal_cards(const NimState& state, int seat);

// Removes one card of the given value and the matching stones.
// Throws InvalidMove when the card is not held or exceeds the pile.
void play(NimState& state, int seat, int value);

// Easy: identical hands {1..max_card}. Normal: identical hands of
// `num_cards` distinct values drawn from 1..max_card.
NimState generate(bool easy, int num_cards, int max_card, int max_stones, CounterRng& rng);

}  // namespace ppx::cardnim
