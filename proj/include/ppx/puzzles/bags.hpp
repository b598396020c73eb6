#pragma once

#include <array>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::bags {

struct PickBag {
  int index = 0;
  bool operator==(const PickBag&) const = default;
};

struct Draw {
  int seat = 0;
  int index = 0;
  int coin = 0;
  bool operator==(const Draw&) const = default;
};

struct BagWorld {
  std::vector<std::vector<int>> contents;  // known configurations, sorted
  std::vector<int> perm;                   // visible index -> configuration (hidden)
  std::vector<std::vector<int>> residual;  // coins left behind each visible index (hidden)
  std::array<int, 2> picks_left{0, 0};
  std::array<int, 2> totals{0, 0};
  std::vector<Draw> log;
  bool two_player = false;
  CounterRng rng;

  int bag_count() const { return static_cast<int>(contents.size()); }
  bool operator==(const BagWorld&) const = default;
};

struct BagPublic {
  std::vector<std::vector<int>> contents;
  std::vector<Draw> log;
  std::array<int, 2> picks_left{0, 0};
  std::array<int, 2> totals{0, 0};
  bool two_player = false;

  int bag_count() const { return static_cast<int>(contents.size()); }
  // Coins drawn so far from each visible index.
  std::vector<std::vector<int>> drawn_by_index() const;
};

BagPublic public_view(const BagWorld& world);

// Draws a uniform coin from the bag behind visible_index for `seat`.
// Throws EmptyBag, NoPicksLeft or IndexOutOfRange.
int draw(BagWorld& world, int visible_index, int seat);

struct Hypothesis {
  std::vector<int> perm;
  double weight = 0.0;  // normalized posterior probability
};

// Permutations consistent with the draw log, weighted by the likelihood of
// the observed draw sequence under a uniform prior.
std::vector<Hypothesis> posterior(const BagPublic& view);

// Expected value of the next coin drawn from each visible index
// (0 for empty indices).
std::vector<double> expected_next_coin(const BagPublic& view);

BagWorld generate(int bag_count, int coins_per_bag, int max_guess, bool two_player,
                  CounterRng& rng);

BagWorld from_contents(std::vector<std::vector<int>> contents, std::vector<int> perm,
                       int max_guess, bool two_player, CounterRng rng);

}  // namespace ppx::bags
