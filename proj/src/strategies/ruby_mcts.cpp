#include <cmath>
#include <map>
#include <memory>
#include <tuple>
#include <utility>

#include "ppx/core/errors.hpp"
#include "ppx/strategies/solvers.hpp"

namespace ppx::strategies {

namespace {

struct Node;

struct Outcome {
  int count = 0;
  double later = 0.0;  // sum of rubies gained after this box
};

struct Arm {
  int visits = 0;
  double total = 0.0;  // sum of rubies gained from this node onward
  std::map<int, std::unique_ptr<Node>> children;  // keyed by gain
  std::map<int, Outcome> outcomes;                // keyed by gain
};

struct Node {
  int visits = 0;
  std::vector<Arm> arms;  // request 0..bound
};

Node& child(Arm& arm, int gain, int bound) {
  auto& slot = arm.children[gain];
  if (!slot) {
    slot = std::make_unique<Node>();
    slot->arms.resize(static_cast<std::size_t>(bound + 1));
  }
  return *slot;
}

double node_value(const Node& node, double floor_share);

// Expected gain of a request: observed outcome frequencies, each followed by
// the best continuation found in the subtree (the rollout mean where the
// subtree is still unexplored).
double arm_value(const Arm& arm, double floor_share) {
  double v = 0.0;
  for (const auto& [gain, o] : arm.outcomes) {
    double later = o.later / o.count;
    if (auto it = arm.children.find(gain); it != arm.children.end() && it->second->visits > 0) {
      later = node_value(*it->second, floor_share);
    }
    v += static_cast<double>(o.count) / arm.visits * (gain + later);
  }
  return v;
}

// Best request among those with a fair share of the visits.
std::pair<int, double> best_arm(const Node& node, double floor_share) {
  int most = 0;
  for (const Arm& arm : node.arms) most = std::max(most, arm.visits);
  const double floor_visits = std::max(1.0, floor_share * node.visits);
  std::pair<int, double> best{0, -1.0};
  for (std::size_t a = 0; a < node.arms.size(); ++a) {
    const Arm& arm = node.arms[a];
    if (arm.visits == 0 || (arm.visits < floor_visits && arm.visits < most)) continue;
    const double v = arm_value(arm, floor_share);
    if (v > best.second) best = {static_cast<int>(a), v};
  }
  return best;
}

double node_value(const Node& node, double floor_share) { return best_arm(node, floor_share).second; }

}  // namespace

MCTSResult ruby_mcts(const ruby::RubyPublic& view, const MCTSParams& params, CounterRng& rng) {
  if (view.boxes_left() <= 0) fail(ErrorCode::NoBoxesLeft, "every box is open");
  if (params.simulations < 1 || params.exploration <= 0.0) {
    fail(ErrorCode::ConfigError, "MCTS needs a positive budget and exploration constant");
  }
  const int root_bound = view.remaining_bound();
  const double scale = view.total > 0 ? static_cast<double>(view.total) : 1.0;
  Node root;
  root.arms.resize(static_cast<std::size_t>(root_bound + 1));

  struct PathStep {
    Node* node;
    int arm;
    int gained_before;  // rubies gained in this simulation before the node
    int gain;
  };
  std::vector<PathStep> path;

  for (int sim = 0; sim < params.simulations; ++sim) {
    const std::vector<int> boxes = ruby::sample_unopened(view, rng);
    path.clear();
    Node* node = &root;
    int gained = 0;
    std::size_t depth = 0;
    bool expanded = false;
    while (depth < boxes.size() && !expanded) {
      const int bound = root_bound - gained;
      // Untried requests first, in random order; then UCB1.
      std::vector<int> untried;
      for (int a = 0; a <= bound; ++a) {
        if (node->arms[static_cast<std::size_t>(a)].visits == 0) untried.push_back(a);
      }
      int a = 0;
      if (!untried.empty()) {
        a = rng.pick(untried);
        expanded = true;
      } else {
        double best = -1.0;
        const double log_n = std::log(static_cast<double>(node->visits));
        for (int r = 0; r <= bound; ++r) {
          const Arm& arm = node->arms[static_cast<std::size_t>(r)];
          const double ucb = arm.total / arm.visits / scale +
                             params.exploration * std::sqrt(log_n / arm.visits);
          if (ucb > best) {
            best = ucb;
            a = r;
          }
        }
      }
      const int gain = a <= boxes[depth] ? a : 0;
      path.push_back({node, a, gained, gain});
      gained += gain;
      ++depth;
      if (depth < boxes.size()) node = &child(node->arms[static_cast<std::size_t>(a)], gain, root_bound - gained);
    }
    // Random rollout over the remaining boxes.
    for (; depth < boxes.size(); ++depth) {
      const int a = static_cast<int>(rng.between(0, root_bound - gained));
      if (a <= boxes[depth]) gained += a;
    }
    for (const PathStep& s : path) {
      ++s.node->visits;
      Arm& arm = s.node->arms[static_cast<std::size_t>(s.arm)];
      ++arm.visits;
      arm.total += gained - s.gained_before;
      Outcome& o = arm.outcomes[s.gain];
      ++o.count;
      o.later += gained - s.gained_before - s.gain;
    }
  }

  MCTSResult result;
  for (const Arm& arm : root.arms) {
    result.visits.push_back(arm.visits);
    result.means.push_back(arm.visits ? arm.total / arm.visits : 0.0);
  }
  std::tie(result.request, result.root_value) = best_arm(root, params.min_visit_share);
  return result;
}

}  // namespace ppx::strategies
