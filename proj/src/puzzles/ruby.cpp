#include "ppx/puzzles/ruby.hpp"

#include <algorithm>
#include <numeric>

#include "ppx/core/errors.hpp"

namespace ppx::ruby {

RubyPublic public_view(const RubyWorld& world) {
  return {world.num_boxes, world.total, world.next_box, world.collected, world.history};
}

int resolve(RubyWorld& world, int request) {
  if (world.boxes_left() <= 0) fail(ErrorCode::NoBoxesLeft, "every box is open");
  if (request < 0) fail(ErrorCode::InvalidMove, "request must be non-negative");
  const int content = world.contents[static_cast<std::size_t>(world.next_box)];
  const int gain = request <= content ? request : 0;
  world.collected += gain;
  world.forfeited += content - gain;
  world.history.push_back({request, gain});
  ++world.next_box;
  return gain;
}

namespace {

// Uniform weak composition via stars and bars.
std::vector<int> random_composition(int total, int parts, CounterRng& rng) {
  if (parts <= 0) return {};
  std::vector<int> slots(static_cast<std::size_t>(total + parts - 1));
  std::iota(slots.begin(), slots.end(), 0);
  // Partial Fisher-Yates: choose parts-1 bar positions.
  const auto bars_needed = static_cast<std::size_t>(parts - 1);
  for (std::size_t i = 0; i < bars_needed; ++i) {
    auto j = i + static_cast<std::size_t>(rng.below(slots.size() - i));
    std::swap(slots[i], slots[j]);
  }
  std::vector<int> bars(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(bars_needed));
  std::sort(bars.begin(), bars.end());
  std::vector<int> out;
  int prev = -1;
  for (int b : bars) {
    out.push_back(b - prev - 1);
    prev = b;
  }
  out.push_back(total + parts - 1 - prev - 1);
  return out;
}

}  // namespace

RubyWorld generate(int num_boxes, int total, CounterRng& rng) {
  if (num_boxes < 1 || total < 0) fail(ErrorCode::InvalidTemplate, "RubyRisks needs boxes and a non-negative total");
  return from_contents(random_composition(total, num_boxes, rng));
}

RubyWorld from_contents(std::vector<int> contents) {
  RubyWorld world;
  world.num_boxes = static_cast<int>(contents.size());
  world.total = std::accumulate(contents.begin(), contents.end(), 0);
  world.contents = std::move(contents);
  return world;
}

double compositions(int total, int parts) {
  if (parts == 0) return total == 0 ? 1.0 : 0.0;
  if (total < 0) return 0.0;
  // C(total + parts - 1, parts - 1)
  double c = 1.0;
  for (int i = 1; i < parts; ++i) c = c * (total + i) / i;
  return c;
}

std::vector<double> remaining_sum_posterior(const RubyPublic& view) {
  const int total = view.total;
  // ways[t]: content assignments of the opened boxes summing to t that
  // agree with every recorded outcome.
  std::vector<double> ways(static_cast<std::size_t>(total + 1), 0.0);
  ways[0] = 1.0;
  for (const Opening& o : view.history) {
    std::vector<double> next(ways.size(), 0.0);
    const bool success = o.gain == o.request;
    const int lo = success ? o.request : 0;
    const int hi = success ? total : o.request - 1;
    for (int t = 0; t <= total; ++t) {
      if (ways[static_cast<std::size_t>(t)] == 0.0) continue;
      for (int c = lo; c <= hi && t + c <= total; ++c) {
        next[static_cast<std::size_t>(t + c)] += ways[static_cast<std::size_t>(t)];
      }
    }
    ways = std::move(next);
  }
  const int m = view.boxes_left();
  std::vector<double> post(static_cast<std::size_t>(total + 1), 0.0);
  double z = 0.0;
  for (int s = 0; s <= total; ++s) {
    const double w = ways[static_cast<std::size_t>(total - s)] * compositions(s, m);
    post[static_cast<std::size_t>(s)] = w;
    z += w;
  }
  if (z > 0.0) {
    for (double& p : post) p /= z;
  }
  return post;
}

std::vector<int> sample_unopened(const RubyPublic& view, CounterRng& rng) {
  const auto post = remaining_sum_posterior(view);
  double u = rng.unit();
  int s = 0;
  for (; s < static_cast<int>(post.size()) - 1; ++s) {
    u -= post[static_cast<std::size_t>(s)];
    if (u < 0.0) break;
  }
  while (s > 0 && post[static_cast<std::size_t>(s)] == 0.0) --s;
  return random_composition(s, view.boxes_left(), rng);
}

}  // namespace ppx::ruby
