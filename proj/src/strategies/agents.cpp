#include <array>
#include <string>

#include "ppx/core/engine.hpp"
#include "ppx/core/errors.hpp"
#include "ppx/strategies/agent.hpp"
#include "ppx/strategies/solvers.hpp"

namespace ppx {

namespace {

constexpr std::array<std::pair<Policy, std::string_view>, 7> kPolicyNames{{
    {Policy::Random, "Random"},
    {Policy::Greedy, "Greedy"},
    {Policy::DP, "DP"},
    {Policy::BruteForce, "BruteForce"},
    {Policy::MCTS, "MCTS"},
    {Policy::SimulatedAnnealing, "SA"},
    {Policy::Search, "Search"},
}};

using strategies::random_move;

class BuiltinAgent : public Agent {
 public:
  BuiltinAgent(PuzzleId puzzle, Policy policy, std::uint64_t seed, StrategyParams params)
      : puzzle_(puzzle),
        policy_(policy),
        params_(params),
        rng_(CounterRng::keyed({seed, static_cast<std::uint64_t>(puzzle),
                                static_cast<std::uint64_t>(policy)})) {}

  std::string label() const override {
    return std::string(to_string(puzzle_)) + ":" + std::string(to_string(policy_));
  }

  void start_match(const GameState& initial, Player seat) override {
    seat_ = seat;
    plan_.clear();
    plan_pos_ = 0;
    (void)initial;
  }

  Decision decide(const GameState& state) override {
    Decision d;
    d.move = choose(state);
    return d;
  }

 private:
  Move choose(const GameState& state) {
    if (policy_ == Policy::Random) return random_move(state, rng_);
    if (policy_ == Policy::Greedy) return strategies::greedy_move(state);
    switch (puzzle_) {
      case PuzzleId::TidyTower: {
        const auto seq = strategies::tidytower_solve(state.as<tidytower::Tower>().colors);
        if (seq.empty()) return random_move(state, rng_);
        return seq.front();
      }
      case PuzzleId::CardNim: {
        const int seat = seat_index(state.active_player);
        return cardnim::PlayCard{nim_.best_card(state.as<cardnim::NimState>(), seat)};
      }
      case PuzzleId::OptimalTouring:
        return touring_step(state.as<touring::TourState>());
      case PuzzleId::CountMaximalCocktails: {
        const auto& game = state.as<cocktails::CocktailGame>();
        cocktails::Family family = strategies::mis_bruteforce(game.graph);
        cocktails::Answer answer;
        if (game.mode == cocktails::AnswerMode::CountOnly) {
          answer.count = family.size();
        } else {
          answer.family = std::move(family);
        }
        return answer;
      }
      case PuzzleId::MaxMaximalCocktails: {
        const auto& game = state.as<maxcocktails::EdgeGameState>();
        if (!edge_ || edge_n_ != game.graph.n) {
          edge_.emplace(game.graph.n, game.strict_increase);
          edge_n_ = game.graph.n;
        }
        auto edge = edge_->best_edge(game.graph);
        if (!edge) fail(ErrorCode::NoLegalMoves, "no legal edge");
        return *edge;
      }
      case PuzzleId::ExclusivityParticles: {
        const auto& space = state.as<particles::ParticleSpace>();
        return particles::Place{hypercube::to_coords(strategies::particles_bruteforce(space), space.d)};
      }
      case PuzzleId::RubyRisks: {
        const auto view = ruby::public_view(state.as<ruby::RubyWorld>());
        return ruby::Request{strategies::ruby_mcts(view, params_.mcts, rng_).request};
      }
      case PuzzleId::Superply: {
        const int value = state.active_player == Player::P1 ? 1 : 2;
        return strategies::superply_search(state.as<superply::SuperplyBoard>(), value,
                                           params_.superply_depth);
      }
      default:
        fail(ErrorCode::ConfigError, "no " + std::string(to_string(policy_)) + " policy for " +
                                         std::string(to_string(puzzle_)));
    }
  }

  // The plan is fixed once at the start of the tour; sites that turn out
  // not to fit are still walked so the schedule matches the plan.
  Move touring_step(const touring::TourState& tour) {
    if (plan_.empty() && tour.itinerary.empty()) {
      plan_ = strategies::touring_sa(tour.sites, params_.sa, rng_);
      plan_pos_ = 0;
    }
    while (plan_pos_ < plan_.size() && tour.visited(plan_[plan_pos_])) ++plan_pos_;
    if (plan_pos_ >= plan_.size()) return touring::TourStep{std::nullopt};
    return touring::TourStep{plan_[plan_pos_++]};
  }

  PuzzleId puzzle_;
  Policy policy_;
  StrategyParams params_;
  CounterRng rng_;
  Player seat_ = Player::P1;
  std::vector<int> plan_;
  std::size_t plan_pos_ = 0;
  strategies::CardNimSolver nim_;
  std::optional<strategies::EdgeGameSolver> edge_;
  int edge_n_ = -1;
};

}  // namespace

std::string_view to_string(Policy policy) {
  for (const auto& [p, name] : kPolicyNames) {
    if (p == policy) return name;
  }
  return "?";
}

std::optional<Policy> parse_policy(std::string_view name) {
  for (const auto& [p, n] : kPolicyNames) {
    if (n == name) return p;
  }
  if (name == "SimulatedAnnealing") return Policy::SimulatedAnnealing;
  return std::nullopt;
}

Policy table_policy(PuzzleId puzzle, Difficulty difficulty) {
  const bool easy = difficulty == Difficulty::Easy;
  switch (puzzle) {
    case PuzzleId::SudoKill:
      return easy ? Policy::Random : Policy::Greedy;
    case PuzzleId::TidyTower:
      return Policy::DP;
    case PuzzleId::CardNim:
      return easy ? Policy::Random : Policy::DP;
    case PuzzleId::OptimalTouring:
      return Policy::SimulatedAnnealing;
    case PuzzleId::CountMaximalCocktails:
      return Policy::BruteForce;
    case PuzzleId::MaxMaximalCocktails:
      return easy ? Policy::Random : Policy::BruteForce;
    case PuzzleId::ExclusivityParticles:
      return easy ? Policy::BruteForce : Policy::Greedy;
    case PuzzleId::ExclusivityProbes:
      return easy ? Policy::Random : Policy::Greedy;
    case PuzzleId::RubyRisks:
      return Policy::MCTS;
    case PuzzleId::BeatOrBombSto:
      return easy ? Policy::Random : Policy::Greedy;
    case PuzzleId::MaxTarget:
      return Policy::Greedy;
    case PuzzleId::LargerTarget:
      return easy ? Policy::Random : Policy::Greedy;
    case PuzzleId::Superply:
      return easy ? Policy::Random : Policy::Search;
  }
  return Policy::Random;
}

bool supports(PuzzleId puzzle, Policy policy) {
  switch (policy) {
    case Policy::Random:
      // Answer spaces for cocktail counting are not enumerable.
      return puzzle != PuzzleId::CountMaximalCocktails;
    case Policy::Greedy:
      return puzzle == PuzzleId::SudoKill || puzzle == PuzzleId::ExclusivityParticles ||
             puzzle == PuzzleId::ExclusivityProbes || puzzle == PuzzleId::BeatOrBombSto ||
             puzzle == PuzzleId::MaxTarget || puzzle == PuzzleId::LargerTarget;
    case Policy::DP:
      return puzzle == PuzzleId::TidyTower || puzzle == PuzzleId::CardNim;
    case Policy::BruteForce:
      return puzzle == PuzzleId::CountMaximalCocktails ||
             puzzle == PuzzleId::MaxMaximalCocktails || puzzle == PuzzleId::ExclusivityParticles;
    case Policy::MCTS:
      return puzzle == PuzzleId::RubyRisks;
    case Policy::SimulatedAnnealing:
      return puzzle == PuzzleId::OptimalTouring;
    case Policy::Search:
      return puzzle == PuzzleId::Superply;
  }
  return false;
}

std::unique_ptr<Agent> make_builtin(PuzzleId puzzle, Policy policy, std::uint64_t seed,
                                    const StrategyParams& params) {
  if (!supports(puzzle, policy)) {
    fail(ErrorCode::ConfigError, std::string(to_string(policy)) + " is not available for " +
                                     std::string(to_string(puzzle)));
  }
  return std::make_unique<BuiltinAgent>(puzzle, policy, seed, params);
}

}  // namespace ppx
