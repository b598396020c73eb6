#pragma once

#include <cstdint>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::ruby {

struct Request {
  std::int64_t amount = 0;
  bool operator==(const Request&) const = default;
};

struct Opening {
  int request = 0;
  int gain = 0;
  bool operator==(const Opening&) const = default;
};

struct RubyWorld {
  int num_boxes = 0;
  int total = 0;
  std::vector<int> contents;  // hidden
  int next_box = 0;
  int collected = 0;
  int forfeited = 0;  // rubies left behind in opened boxes
  std::vector<Opening> history;

  int boxes_left() const { return num_boxes - next_box; }
  bool operator==(const RubyWorld&) const = default;
};

struct RubyPublic {
  int num_boxes = 0;
  int total = 0;
  int next_box = 0;
  int collected = 0;
  std::vector<Opening> history;

  int boxes_left() const { return num_boxes - next_box; }
  // Upper bound on what any remaining box can hold.
  int remaining_bound() const { return total - collected; }
};

RubyPublic public_view(const RubyWorld& world);

// Opens the next box: gain = request when it fits, otherwise 0.
// Throws NoBoxesLeft.
int resolve(RubyWorld& world, int request);

// Uniform weak composition of total into num_boxes parts.
RubyWorld generate(int num_boxes, int total, CounterRng& rng);

RubyWorld from_contents(std::vector<int> contents);

// Number of weak compositions of `total` into `parts` parts.
double compositions(int total, int parts);

// Posterior over the rubies still sitting in the unopened boxes, indexed
// by that sum, under a uniform prior on compositions.
std::vector<double> remaining_sum_posterior(const RubyPublic& view);

// Samples the contents of the unopened boxes from the exact posterior.
std::vector<int> sample_unopened(const RubyPublic& view, CounterRng& rng);

}  // namespace ppx::ruby
