#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::beatorbomb {

enum class Action { Compete, GiveUp };

// Card values: A=1, 2..10, J=11, Q=12, K=13.
struct Play {
  int card = 0;
  Action action = Action::Compete;
  bool operator==(const Play&) const = default;
};

struct Round {
  Play p1;
  Play p2;
  int award1 = 0;
  int award2 = 0;
  bool operator==(const Round&) const = default;
};

struct CardDuelState {
  std::array<std::vector<int>, 2> hands;  // sorted ascending
  std::array<int, 2> points{0, 0};
  std::optional<Play> pending;  // P1's hidden choice until P2 answers
  std::vector<Round> rounds;
  int hand_total = 0;  // shared dealt total

  bool operator==(const CardDuelState&) const = default;
};

std::string card_label(int value);
std::optional<int> parse_card(std::string_view label);

// Awards for one round: compete/compete -> the higher card takes both
// values (equal cards award nothing); give/give -> nothing; a lone
// competitor takes its own card value.
std::pair<int, int> round_awards(Play a, Play b);

// Removes both cards and adds the awards. Throws CardNotHeld.
std::pair<int, int> resolve_round(CardDuelState& state, Play a, Play b);

bool holds(const std::vector<int>& hand, int card);

// Two disjoint hands of num_cards from a 52-card deck with equal totals.
CardDuelState deal(int num_cards, CounterRng& rng);

}  // namespace ppx::beatorbomb
