#include <algorithm>
#include <limits>

#include "ppx/core/engine.hpp"
#include "ppx/core/errors.hpp"
#include "ppx/strategies/solvers.hpp"

namespace ppx::strategies {

Move random_move(const GameState& state, CounterRng& rng) {
  MoveList list = legal_moves(state);
  if (list.moves.empty()) fail(ErrorCode::NoLegalMoves, "no legal moves to choose from");
  return rng.pick(list.moves);
}

sudokill::Placement sudokill_greedy(const sudokill::Board& board) {
  const auto moves = sudokill::legal_placements(board);
  if (moves.empty()) fail(ErrorCode::NoLegalMoves, "no legal placement");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  sudokill::Placement choice = moves.front();
  for (const auto& p : moves) {
    sudokill::Board next = board;
    next.grid[static_cast<std::size_t>(p.row * next.n + p.col)] = p.value;
    next.last_move = p;
    const std::size_t replies = sudokill::count_legal_placements(next);
    if (replies < best) {
      best = replies;
      choice = p;
      if (best == 0) break;
    }
  }
  return choice;
}

particles::Vertex particles_greedy(const particles::ParticleSpace& space) {
  const auto moves = particles::legal_placements(space);
  if (moves.empty()) fail(ErrorCode::NoLegalMoves, "no legal placement");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  particles::Vertex choice = moves.front();
  for (auto v : moves) {
    particles::ParticleSpace next = space;
    next.placed.push_back(v);
    const std::size_t replies = particles::legal_placements(next).size();
    if (replies < best) {
      best = replies;
      choice = v;
      if (best == 0) break;
    }
  }
  return choice;
}

hypercube::Vertex probes_greedy(const probes::ProbePublic& view) {
  const auto configs = probes::consistent_configurations(view);
  const hypercube::Vertex cells = hypercube::Vertex{1} << view.d;
  std::vector<int> hits(cells, 0);
  for (const auto& c : configs) {
    for (auto v : c) ++hits[v];
  }
  auto found = [&](hypercube::Vertex v) {
    return std::binary_search(view.found.begin(), view.found.end(), v);
  };
  const int total = static_cast<int>(configs.size());
  for (hypercube::Vertex v = 0; v < cells; ++v) {
    if (total > 0 && hits[v] == total && !found(v)) return v;
  }
  std::vector<bool> probed(cells, false);
  for (const auto& r : view.history) probed[r.position] = true;
  int best = -1;
  hypercube::Vertex choice = 0;
  for (hypercube::Vertex v = 0; v < cells; ++v) {
    if (probed[v]) continue;
    const int split = std::min(hits[v], total - hits[v]);
    if (split > best) {
      best = split;
      choice = v;
    }
  }
  return choice;
}

beatorbomb::Play beatorbomb_greedy(const std::vector<int>& own, const std::vector<int>& other) {
  if (own.empty()) fail(ErrorCode::NoLegalMoves, "empty hand");
  std::vector<int> mine = own;
  std::sort(mine.begin(), mine.end());
  if (other.empty()) return {mine.back(), beatorbomb::Action::Compete};
  std::vector<int> theirs = other;
  std::sort(theirs.begin(), theirs.end());
  const std::size_t m = theirs.size();
  const double median = m % 2 ? theirs[m / 2] : (theirs[m / 2 - 1] + theirs[m / 2]) / 2.0;
  for (int card : mine) {
    if (card > median) return {card, beatorbomb::Action::Compete};
  }
  return {mine.front(), beatorbomb::Action::GiveUp};
}

int bags_greedy(const bags::BagPublic& view, const std::vector<int>& legal_indices) {
  if (legal_indices.empty()) fail(ErrorCode::NoLegalMoves, "no bag can be picked");
  const auto expect = bags::expected_next_coin(view);
  int choice = legal_indices.front();
  for (int i : legal_indices) {
    if (expect[static_cast<std::size_t>(i)] > expect[static_cast<std::size_t>(choice)] + 1e-12) choice = i;
  }
  return choice;
}

Move greedy_move(const GameState& state) {
  switch (state.puzzle()) {
    case PuzzleId::SudoKill:
      return sudokill_greedy(state.as<sudokill::Board>());
    case PuzzleId::ExclusivityParticles: {
      const auto& space = state.as<particles::ParticleSpace>();
      return particles::Place{hypercube::to_coords(particles_greedy(space), space.d)};
    }
    case PuzzleId::ExclusivityProbes: {
      const auto view = probes::public_view(state.as<probes::ProbeWorld>());
      return probes::Probe{hypercube::to_coords(probes_greedy(view), view.d)};
    }
    case PuzzleId::BeatOrBombSto: {
      const auto& duel = state.as<beatorbomb::CardDuelState>();
      const int seat = seat_index(state.active_player);
      return beatorbomb_greedy(duel.hands[static_cast<std::size_t>(seat)],
                               duel.hands[static_cast<std::size_t>(1 - seat)]);
    }
    case PuzzleId::MaxTarget:
    case PuzzleId::LargerTarget: {
      std::vector<int> indices;
      for (const Move& m : legal_moves(state).moves) indices.push_back(std::get<bags::PickBag>(m).index);
      return bags::PickBag{bags_greedy(bags::public_view(state.as<bags::BagWorld>()), indices)};
    }
    default:
      fail(ErrorCode::ConfigError, "no greedy policy for " + std::string(to_string(state.puzzle())));
  }
}

}  // namespace ppx::strategies
