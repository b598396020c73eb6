#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ppx/core/rng.hpp"
#include "ppx/core/state.hpp"
#include "ppx/strategies/params.hpp"

namespace ppx::strategies {

// Uniform choice from legal_moves. Throws NoLegalMoves.
Move random_move(const GameState& state, CounterRng& rng);

// Myopic per-puzzle choice; first in canonical order on ties.
// Supported: SudoKill, ExclusivityParticles, ExclusivityProbes,
// BeatOrBombSto, MaxTarget, LargerTarget. Throws NoLegalMoves.
Move greedy_move(const GameState& state);

sudokill::Placement sudokill_greedy(const sudokill::Board& board);
particles::Vertex particles_greedy(const particles::ParticleSpace& space);
hypercube::Vertex probes_greedy(const probes::ProbePublic& view);
beatorbomb::Play beatorbomb_greedy(const std::vector<int>& own, const std::vector<int>& other);
int bags_greedy(const bags::BagPublic& view, const std::vector<int>& legal_indices);

// Win/loss labelling of CardNim positions, memoized on (stones, hands,
// mover).
class CardNimSolver {
 public:
  static constexpr int kCap = 20;

  // True iff the player to move (seat) wins with perfect play.
  // Throws CapExceeded when more than kCap cards are in play.
  bool wins(const cardnim::NimState& state, int seat);

  // A winning card if one exists, else the smallest legal card.
  // Throws NoLegalMoves when no card can be played.
  int best_card(const cardnim::NimState& state, int seat);

 private:
  bool solve(int stones, const std::vector<int>& mover, const std::vector<int>& other);
  std::unordered_map<std::string, bool> memo_;
};

// Minimal move sequence. Throws CapExceeded for towers longer than 14.
std::vector<tidytower::Rotation> tidytower_solve(const std::vector<tidytower::Color>& colors);

// Best plan (0-based site order) found by annealing over ordered subsets.
std::vector<int> touring_sa(std::span<const touring::Site> sites, const SAParams& params,
                            CounterRng& rng);

// Filters all 2^n subsets. Throws CapExceeded for n > 16.
cocktails::Family mis_bruteforce(const cocktails::Graph& graph);

// Perfect play for MaxMaximalCocktails via a memoized game tree over edge
// sets (n <= 8).
class EdgeGameSolver {
 public:
  explicit EdgeGameSolver(int n, bool strict_increase);
  bool wins(std::uint32_t edge_mask);
  // A winning edge if one exists, else the first legal edge.
  std::optional<maxcocktails::AddEdge> best_edge(const cocktails::Graph& graph);
  std::uint32_t mask_of(const cocktails::Graph& graph) const;

 private:
  std::uint64_t count(std::uint32_t edge_mask);
  int n_;
  bool strict_;
  std::vector<std::pair<int, int>> pairs_;
  std::unordered_map<std::uint32_t, std::uint64_t> counts_;
  std::unordered_map<std::uint32_t, bool> wins_;
};

// Full game-tree search for ExclusivityParticles. Returns a winning
// placement if one exists, else the first legal one. Throws CapExceeded for
// d > 12 and NoLegalMoves when nothing can be placed.
particles::Vertex particles_bruteforce(const particles::ParticleSpace& space);
bool particles_first_player_wins(const particles::ParticleSpace& space);

struct MCTSResult {
  int request = 0;
  double root_value = 0.0;  // expected rubies of the chosen request, best continuation in the tree
  std::vector<int> visits;  // per request 0..bound
  std::vector<double> means;
};

MCTSResult ruby_mcts(const ruby::RubyPublic& view, const MCTSParams& params, CounterRng& rng);

// Depth-limited search for Superply (depth 1: own move only; depth 2: own
// move against every opponent reply on an empty cell).
// Throws NoLegalMoves when the hint admits no cell.
superply::Claim superply_search(const superply::SuperplyBoard& board, int player_value, int depth);

// Search evaluation: opponent completion distance minus own.
int superply_eval(const superply::SuperplyBoard& board, int player_value);

}  // namespace ppx::strategies
