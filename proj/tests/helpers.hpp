#pragma once

#include <string>
#include <vector>

#include "ppx/core/engine.hpp"
#include "ppx/core/errors.hpp"
#include "ppx/core/record.hpp"
#include "ppx/core/rng.hpp"
#include "ppx/strategies/solvers.hpp"

namespace testing {

struct Played {
  ppx::GameState before;
  ppx::Move move;
  ppx::Feedback feedback;
};

// Uniformly random legal play to the end. CountMaximalCocktails in list
// mode has no listed answers and submits the true family.
inline std::vector<Played> random_playout(const ppx::PuzzleTemplate& tmpl, std::uint64_t seed,
                                          ppx::GameState* final_state = nullptr) {
  ppx::CounterRng rng(ppx::mix64(seed ^ 0x5eedULL));
  ppx::GameState s = ppx::instantiate(tmpl);
  std::vector<Played> out;
  while (!s.finished()) {
    const auto legal = ppx::legal_moves(s);
    ppx::Move m;
    if (!legal.moves.empty()) {
      m = rng.pick(legal.moves);
    } else if (s.puzzle() == ppx::PuzzleId::CountMaximalCocktails) {
      m = ppx::cocktails::Answer{std::nullopt,
                                 ppx::cocktails::enumerate_maximal(s.as<ppx::cocktails::CocktailGame>().graph)};
    } else {
      break;
    }
    auto r = ppx::step(s, m);
    out.push_back({s, m, r.feedback});
    s = std::move(r.state);
  }
  if (final_state) *final_state = s;
  return out;
}

// A record for a finished trajectory.
inline ppx::MatchRecord make_record(const ppx::PuzzleTemplate& tmpl, const std::vector<Played>& played) {
  ppx::MatchRecord rec;
  rec.tmpl = tmpl;
  rec.participants = ppx::is_two_player(tmpl.puzzle) ? std::vector<std::string>{"a", "b"}
                                                     : std::vector<std::string>{"a"};
  for (const auto& p : played) {
    rec.trajectory.push_back({ppx::state_hash(p.before), p.before.active_player, p.move, p.feedback});
  }
  rec.statuses = ppx::derive_statuses(rec);
  const bool done = !rec.trajectory.empty() && rec.trajectory.back().feedback.terminated;
  if (done) rec.raw_scores = ppx::evaluate(rec);
  return rec;
}

template <class F>
ppx::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const ppx::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a ppx::Error");
}

}  // namespace testing
