#include "ppx/puzzles/beatorbomb.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ppx/core/errors.hpp"

namespace ppx::beatorbomb {

std::string card_label(int value) {
  switch (value) {
    case 1: return "A";
    case 11: return "J";
    case 12: return "Q";
    case 13: return "K";
    default: return std::to_string(value);
  }
}

std::optional<int> parse_card(std::string_view label) {
  if (label == "A") return 1;
  if (label == "J") return 11;
  if (label == "Q") return 12;
  if (label == "K") return 13;
  if (label.empty() || label.size() > 2) return std::nullopt;
  int v = 0;
  for (char c : label) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  if (v < 2 || v > 10) return std::nullopt;
  return v;
}

std::pair<int, int> round_awards(Play a, Play b) {
  const bool ca = a.action == Action::Compete;
  const bool cb = b.action == Action::Compete;
  if (ca && cb) {
    if (a.card > b.card) return {a.card + b.card, 0};
    if (b.card > a.card) return {0, a.card + b.card};
    return {0, 0};
  }
  if (ca) return {a.card, 0};
  if (cb) return {0, b.card};
  return {0, 0};
}

bool holds(const std::vector<int>& hand, int card) {
  return std::find(hand.begin(), hand.end(), card) != hand.end();
}

std::pair<int, int> resolve_round(CardDuelState& state, Play a, Play b) {
  if (!holds(state.hands[0], a.card)) fail(ErrorCode::CardNotHeld, "P1 does not hold " + card_label(a.card));
  if (!holds(state.hands[1], b.card)) fail(ErrorCode::CardNotHeld, "P2 does not hold " + card_label(b.card));
  state.hands[0].erase(std::find(state.hands[0].begin(), state.hands[0].end(), a.card));
  state.hands[1].erase(std::find(state.hands[1].begin(), state.hands[1].end(), b.card));
  auto awards = round_awards(a, b);
  state.points[0] += awards.first;
  state.points[1] += awards.second;
  state.rounds.push_back({a, b, awards.first, awards.second});
  return awards;
}

namespace {

// Chooses counts per value (taken in a random order) so that exactly
// `cards` cards summing to `target` are picked from `avail`.
bool pick_counts(const std::array<int, 14>& avail, const std::vector<int>& order, std::size_t idx,
                 int cards, int target, std::array<int, 14>& take, CounterRng& rng, long& budget) {
  if (--budget < 0) return false;
  if (cards == 0) return target == 0;
  if (idx == order.size() || target <= 0) return false;
  // Bound: remaining values can reach the target with `cards` cards.
  int max_v = 0;
  int min_v = 14;
  for (std::size_t i = idx; i < order.size(); ++i) {
    if (avail[static_cast<std::size_t>(order[i])] > 0) {
      max_v = std::max(max_v, order[i]);
      min_v = std::min(min_v, order[i]);
    }
  }
  if (max_v == 0 || target > cards * max_v || target < cards * min_v) return false;
  const int v = order[idx];
  const int most = std::min(avail[static_cast<std::size_t>(v)], cards);
  std::vector<int> counts(static_cast<std::size_t>(most + 1));
  std::iota(counts.begin(), counts.end(), 0);
  rng.shuffle(counts);
  for (int c : counts) {
    if (c * v > target) continue;
    take[static_cast<std::size_t>(v)] = c;
    if (pick_counts(avail, order, idx + 1, cards - c, target - c * v, take, rng, budget)) return true;
  }
  take[static_cast<std::size_t>(v)] = 0;
  return false;
}

}  // namespace

CardDuelState deal(int num_cards, CounterRng& rng) {
  if (num_cards < 1 || num_cards > 26) fail(ErrorCode::InvalidTemplate, "BeatOrBomb needs 1..26 cards per hand");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> deck;
    for (int v = 1; v <= 13; ++v) deck.insert(deck.end(), 4, v);
    rng.shuffle(deck);
    std::vector<int> first(deck.begin(), deck.begin() + num_cards);
    const int total = std::accumulate(first.begin(), first.end(), 0);
    std::array<int, 14> avail{};
    for (int v = 1; v <= 13; ++v) avail[static_cast<std::size_t>(v)] = 4;
    for (int v : first) --avail[static_cast<std::size_t>(v)];
    std::vector<int> order(13);
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    std::array<int, 14> take{};
    long budget = 200000;
    if (!pick_counts(avail, order, 0, num_cards, total, take, rng, budget)) continue;
    std::vector<int> second;
    for (int v = 1; v <= 13; ++v) second.insert(second.end(), take[static_cast<std::size_t>(v)], v);
    std::sort(first.begin(), first.end());
    CardDuelState state;
    state.hands = {first, second};
    state.hand_total = total;
    return state;
  }
  fail(ErrorCode::InvalidTemplate, "could not deal balanced hands");
}

}  // namespace ppx::beatorbomb
