#include "ppx/puzzles/bags.hpp"

#include <algorithm>
#include <numeric>

#include "ppx/core/errors.hpp"

namespace ppx::bags {

std::vector<std::vector<int>> BagPublic::drawn_by_index() const {
  std::vector<std::vector<int>> drawn(contents.size());
  for (const Draw& d : log) drawn[static_cast<std::size_t>(d.index)].push_back(d.coin);
  return drawn;
}

BagPublic public_view(const BagWorld& world) {
  return {world.contents, world.log, world.picks_left, world.totals, world.two_player};
}

int draw(BagWorld& world, int visible_index, int seat) {
  if (visible_index < 0 || visible_index >= world.bag_count()) {
    fail(ErrorCode::IndexOutOfRange, "no bag " + std::to_string(visible_index));
  }
  if (world.picks_left[static_cast<std::size_t>(seat)] <= 0) fail(ErrorCode::NoPicksLeft, "no picks left");
  auto& bag = world.residual[static_cast<std::size_t>(visible_index)];
  if (bag.empty()) fail(ErrorCode::EmptyBag, "bag " + std::to_string(visible_index) + " is empty");
  const auto pos = static_cast<std::size_t>(world.rng.below(bag.size()));
  const int coin = bag[pos];
  bag.erase(bag.begin() + static_cast<std::ptrdiff_t>(pos));
  --world.picks_left[static_cast<std::size_t>(seat)];
  world.totals[static_cast<std::size_t>(seat)] += coin;
  world.log.push_back({seat, visible_index, coin});
  return coin;
}

std::vector<Hypothesis> posterior(const BagPublic& view) {
  const int n = view.bag_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Hypothesis> out;
  double z = 0.0;
  do {
    std::vector<std::vector<int>> residual(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) residual[static_cast<std::size_t>(i)] = view.contents[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    double w = 1.0;
    for (const Draw& d : view.log) {
      auto& bag = residual[static_cast<std::size_t>(d.index)];
      auto it = std::find(bag.begin(), bag.end(), d.coin);
      if (it == bag.end()) {
        w = 0.0;
        break;
      }
      w *= static_cast<double>(std::count(bag.begin(), bag.end(), d.coin)) / static_cast<double>(bag.size());
      bag.erase(it);
    }
    if (w > 0.0) {
      out.push_back({perm, w});
      z += w;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& h : out) h.weight /= z;
  return out;
}

std::vector<double> expected_next_coin(const BagPublic& view) {
  const auto drawn = view.drawn_by_index();
  std::vector<double> expect(static_cast<std::size_t>(view.bag_count()), 0.0);
  for (const Hypothesis& h : posterior(view)) {
    for (int i = 0; i < view.bag_count(); ++i) {
      auto bag = view.contents[static_cast<std::size_t>(h.perm[static_cast<std::size_t>(i)])];
      for (int coin : drawn[static_cast<std::size_t>(i)]) bag.erase(std::find(bag.begin(), bag.end(), coin));
      if (bag.empty()) continue;
      const double mean = std::accumulate(bag.begin(), bag.end(), 0.0) / static_cast<double>(bag.size());
      expect[static_cast<std::size_t>(i)] += h.weight * mean;
    }
  }
  return expect;
}

BagWorld from_contents(std::vector<std::vector<int>> contents, std::vector<int> perm,
                       int max_guess, bool two_player, CounterRng rng) {
  BagWorld world;
  for (auto& bag : contents) std::sort(bag.begin(), bag.end());
  world.contents = std::move(contents);
  world.perm = std::move(perm);
  for (int p : world.perm) world.residual.push_back(world.contents[static_cast<std::size_t>(p)]);
  world.picks_left = {max_guess, two_player ? max_guess : 0};
  world.two_player = two_player;
  world.rng = rng;
  return world;
}

BagWorld generate(int bag_count, int coins_per_bag, int max_guess, bool two_player,
                  CounterRng& rng) {
  if (bag_count > 8) fail(ErrorCode::InvalidTemplate, "at most 8 bags are supported");
  const int picks = max_guess * (two_player ? 2 : 1);
  if (picks > bag_count * coins_per_bag) fail(ErrorCode::InvalidTemplate, "more picks than coins");
  std::vector<std::vector<int>> contents;
  while (static_cast<int>(contents.size()) < bag_count) {
    std::vector<int> bag;
    for (int c = 0; c < coins_per_bag; ++c) bag.push_back(static_cast<int>(rng.between(1, 10)));
    std::sort(bag.begin(), bag.end());
    if (std::find(contents.begin(), contents.end(), bag) == contents.end()) contents.push_back(bag);
  }
  std::sort(contents.begin(), contents.end());
  std::vector<int> perm(static_cast<std::size_t>(bag_count));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return from_contents(std::move(contents), std::move(perm), max_guess, two_player, rng.derive("draws"));
}

}  // namespace ppx::bags
