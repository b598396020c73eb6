#pragma once

#include <cmath>

namespace ppx {

struct SAParams {
  double t0_factor = 10.0;  // T0 = t0_factor * mean site value
  double cooling = 0.995;
  int iterations = 20000;
};

struct MCTSParams {
  int simulations = 2000;
  double exploration = std::sqrt(2.0);
  // Only root actions with at least this share of the simulations compete
  // for the final choice.
  double min_visit_share = 0.01;
};

struct StrategyParams {
  SAParams sa;
  MCTSParams mcts;
  int superply_depth = 2;
};

}  // namespace ppx
