#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace ppx;
using testing::error_of;

namespace {

const std::vector<std::vector<int>> kSudokillGrid = {
    {6, 8, 4, 5, 1, 3, 2, 7, 9}, {5, 9, 7, 6, 2, 0, 1, 8, 0}, {2, 3, 1, 4, 8, 7, 6, 5, 0},
    {9, 1, 2, 7, 6, 4, 8, 0, 3}, {4, 6, 8, 3, 0, 1, 7, 2, 5}, {7, 5, 3, 2, 9, 8, 4, 1, 6},
    {8, 4, 5, 1, 3, 2, 9, 6, 7}, {1, 0, 6, 9, 0, 5, 0, 3, 8}, {3, 2, 0, 0, 7, 0, 5, 4, 0},
};

GameState sudokill_state(const std::vector<std::vector<int>>& rows, std::optional<sudokill::Placement> last) {
  GameState s = instantiate(standard_template(PuzzleId::SudoKill, Difficulty::Normal, 1));
  s.as<sudokill::Board>() = sudokill::Board::from_rows(rows, last);
  return s;
}

std::set<std::pair<int, int>> cells_of(const std::vector<sudokill::Cell>& cells) {
  std::set<std::pair<int, int>> out;
  for (auto c : cells) out.insert({c.row, c.col});
  return out;
}

// Row, column and box scan written independently of the rule code.
bool valid_scan(const sudokill::Board& b, int row, int col, int value) {
  const int box = b.box_side();
  for (int r = 0; r < b.n; ++r) {
    for (int c = 0; c < b.n; ++c) {
      if (r == row && c == col) continue;
      const bool same_box = r / box == row / box && c / box == col / box;
      if ((r == row || c == col || same_box) && b.at(r, c) == value) return false;
    }
  }
  return true;
}

GameState superply_state(int n) {
  auto t = standard_template(PuzzleId::Superply, Difficulty::Normal, 1);
  t.size_params["side"] = n;
  return instantiate(t);
}

std::vector<int> flat(const superply::SuperplyBoard& b) { return b.grid; }

}  // namespace

TEST_CASE("SudoKill allowed cells") {
  const auto s = sudokill_state(kSudokillGrid, sudokill::Placement{0, 8, 9});
  const auto& board = s.as<sudokill::Board>();
  CHECK(cells_of(sudokill::allowed_cells(board)) == std::set<std::pair<int, int>>{{1, 8}, {2, 8}, {8, 8}});
  std::set<std::pair<int, int>> moved;
  for (const auto& m : legal_moves(s).moves) {
    const auto& p = std::get<sudokill::Placement>(m);
    moved.insert({p.row, p.col});
  }
  CHECK(moved.size() <= 3);
  for (auto cell : moved) CHECK((cell == std::pair{1, 8} || cell == std::pair{2, 8} || cell == std::pair{8, 8}));

  const auto empty = sudokill::Board::from_rows(std::vector<std::vector<int>>(4, std::vector<int>(4, 0)));
  CHECK(sudokill::allowed_cells(empty).size() == 16);

  // Row 0 and column 0 are full, so any empty cell is allowed.
  const auto fallback = sudokill::Board::from_rows(
      {{1, 2, 3, 4}, {3, 0, 0, 0}, {2, 0, 0, 0}, {4, 0, 0, 0}}, sudokill::Placement{0, 0, 1});
  CHECK(sudokill::allowed_cells(fallback).size() == 9);
}

TEST_CASE("SudoKill placing 4 at (1, 8) wins") {
  auto rows = kSudokillGrid;
  rows[8][8] = 1;
  const auto s = sudokill_state(rows, sudokill::Placement{0, 8, 9});
  const auto r = step(s, sudokill::Placement{1, 8, 4});
  CHECK(r.feedback.legal());
  const auto& after = r.state.as<sudokill::Board>();
  CHECK(cells_of(sudokill::allowed_cells(after)) == std::set<std::pair<int, int>>{{1, 5}, {2, 8}});
  for (int v = 1; v <= 9; ++v) {
    CHECK(!sudokill::is_valid(after, 1, 5, v));
    CHECK(!sudokill::is_valid(after, 2, 8, v));
  }
  CHECK(r.feedback.terminated);
  CHECK(r.feedback.outcome == Outcome::win(Player::P1));
}

TEST_CASE("SudoKill validity matches a full scan") {
  CHECK(!sudokill::is_valid(sudokill::Board::from_rows({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}), 0, 2, 1));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    for (const auto& played : testing::random_playout(standard_template(PuzzleId::SudoKill, Difficulty::Normal, seed), seed)) {
      const auto& b = played.before.as<sudokill::Board>();
      CHECK(!sudokill::allowed_cells(b).empty());
      for (int r = 0; r < b.n; ++r) {
        for (int c = 0; c < b.n; ++c) {
          if (b.at(r, c) != 0) continue;
          for (int v = 1; v <= b.n; ++v) CHECK(sudokill::is_valid(b, r, c, v) == valid_scan(b, r, c, v));
        }
      }
    }
  }
}

TEST_CASE("SudoKill: allowed cells exist while the board has blanks") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    for (const auto& played : testing::random_playout(standard_template(PuzzleId::SudoKill, Difficulty::Easy, seed), seed)) {
      const auto& b = played.before.as<sudokill::Board>();
      if (b.empty_count() > 0) CHECK(!sudokill::allowed_cells(b).empty());
    }
  }
}

TEST_CASE("CardNim legal cards") {
  cardnim::NimState s;
  s.stones = 1;
  s.hands = {std::vector<int>{2, 3}, std::vector<int>{1}};
  CHECK(cardnim::legal_cards(s, 0).empty());
  s.stones = 5;
  s.hands[0] = {1, 2, 3};
  CHECK(cardnim::legal_cards(s, 0) == std::vector<int>{1, 2, 3});
  CHECK(error_of([&] { cardnim::play(s, 0, 4); }) == ErrorCode::InvalidMove);

  CounterRng rng(3);
  for (int i = 0; i < 200; ++i) {
    s.stones = static_cast<int>(rng.between(0, 12));
    s.hands[0].clear();
    for (int c = 0; c < 5; ++c) s.hands[0].push_back(static_cast<int>(rng.between(1, 9)));
    std::sort(s.hands[0].begin(), s.hands[0].end());
    std::vector<int> expect;
    std::copy_if(s.hands[0].begin(), s.hands[0].end(), std::back_inserter(expect),
                 [&](int c) { return c <= s.stones; });
    CHECK(cardnim::legal_cards(s, 0) == expect);
  }
}

TEST_CASE("CardNim: a player with no playable card loses") {
  GameState s = instantiate(standard_template(PuzzleId::CardNim, Difficulty::Easy, 1));
  auto& nim = s.as<cardnim::NimState>();
  nim.stones = 3;
  nim.hands = {std::vector<int>{2}, std::vector<int>{2, 3}};
  const auto r = step(s, cardnim::PlayCard{2});
  CHECK(r.feedback.terminated);
  CHECK(r.feedback.outcome == Outcome::win(Player::P1));
}

TEST_CASE("CardNim conservation and minimax winners") {
  for (Difficulty d : kAllDifficulties) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto t = standard_template(PuzzleId::CardNim, d, seed);
      const GameState s0 = instantiate(t);
      const auto& nim0 = s0.as<cardnim::NimState>();
      CHECK(nim0.hands[0] == nim0.hands[1]);
      GameState final_state;
      const auto played = testing::random_playout(t, seed, &final_state);
      int removed = 0;
      for (const auto& p : played) {
        removed += std::get<cardnim::PlayCard>(p.move).value;
        CHECK(p.before.as<cardnim::NimState>().stones + removed - std::get<cardnim::PlayCard>(p.move).value ==
              nim0.stones);
      }
      CHECK(final_state.as<cardnim::NimState>().stones + removed == nim0.stones);

      // Under perfect play from S0, the winner is the one the oracle names.
      if (nim0.hands[0].size() * 2 <= 8) {
        const bool first_wins = oracle::cardnim_minimax(nim0.stones, nim0.hands[0], nim0.hands[1]);
        strategies::CardNimSolver solver;
        CHECK(solver.wins(nim0, 0) == first_wins);
      }
    }
  }
  cardnim::NimState example;
  example.stones = 5;
  example.hands = {std::vector<int>{1, 2, 3}, std::vector<int>{1, 2, 3}};
  CHECK(!oracle::cardnim_minimax(5, {1, 2, 3}, {1, 2, 3}));
  strategies::CardNimSolver solver;
  CHECK(!solver.wins(example, 0));
}

TEST_CASE("MaxMaximalCocktails edge legality") {
  auto state = maxcocktails::start(3);
  CHECK(state.count == 1);
  auto first = maxcocktails::check_edge(state, {1, 2});
  CHECK(first.legal);
  CHECK(first.new_count == 2);
  maxcocktails::add_edge(state, {1, 2}, first.new_count);
  // {1, 3} and {2} are the maximal sets of the path 1-2-3.
  auto second = maxcocktails::check_edge(state, {2, 3});
  CHECK(second.legal);
  CHECK(second.new_count == 2);
  maxcocktails::add_edge(state, {2, 3}, second.new_count);
  // Closing the triangle leaves {1}, {2}, {3}.
  auto third = maxcocktails::check_edge(state, {1, 3});
  CHECK(third.legal);
  CHECK(third.new_count == 3);

  CHECK(error_of([&] { maxcocktails::check_edge(state, {2, 2}); }) == ErrorCode::SelfLoop);
  CHECK(error_of([&] { maxcocktails::check_edge(state, {2, 1}); }) == ErrorCode::DuplicateEdge);
  CHECK(error_of([&] { maxcocktails::check_edge(state, {2, 4}); }) == ErrorCode::IndexOutOfRange);

  auto strict = maxcocktails::start(3, true);
  maxcocktails::add_edge(strict, {1, 2}, 2);
  CHECK(!maxcocktails::check_edge(strict, {2, 3}).legal);
}

TEST_CASE("MaxMaximalCocktails recounts match the subset oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto t = standard_template(PuzzleId::MaxMaximalCocktails, Difficulty::Normal, seed);
    std::uint64_t prev = 0;
    for (const auto& played : testing::random_playout(t, seed)) {
      const auto& game = played.before.as<maxcocktails::EdgeGameState>();
      CHECK(game.count == oracle::mis_subsets(game.graph.n, game.graph.edges).size());
      CHECK(game.count >= prev);
      prev = game.count;
      for (int u = 1; u <= game.graph.n; ++u) {
        for (int v = u + 1; v <= game.graph.n; ++v) {
          if (game.graph.has_edge(u, v)) continue;
          auto edges = game.graph.edges;
          edges.emplace_back(u, v);
          const auto expect = oracle::mis_subsets(game.graph.n, edges).size();
          const auto got = maxcocktails::check_edge(game, {u, v});
          CHECK(got.new_count == expect);
          CHECK(got.legal == (expect >= game.count));
        }
      }
    }
  }
}

TEST_CASE("ExclusivityParticles placement") {
  particles::ParticleSpace space{3, 2, {}};
  space.placed = {hypercube::from_coords({0, 0, 0}, 3), hypercube::from_coords({0, 1, 1}, 3)};
  CHECK(particles::placement_legal(space, std::vector<int>{1, 0, 1}));
  CHECK(!particles::placement_legal(space, std::vector<int>{0, 1, 1}));
  CHECK(error_of([&] { particles::placement_legal(space, std::vector<int>{1, 0}); }) == ErrorCode::DimensionMismatch);

  space.placed.push_back(hypercube::from_coords({1, 0, 1}, 3));
  // [1, 1, 0] is at distance 2 from each of the three placed particles.
  CHECK(particles::legal_placements(space) == std::vector<particles::Vertex>{hypercube::from_coords({1, 1, 0}, 3)});
  space.placed.push_back(hypercube::from_coords({1, 1, 0}, 3));
  CHECK(particles::legal_placements(space).empty());

  CounterRng rng(8);
  for (int i = 0; i < 300; ++i) {
    const int d = static_cast<int>(rng.between(2, 6));
    particles::ParticleSpace s{d, static_cast<int>(rng.between(1, d)), {}};
    for (int j = 0; j < 3; ++j) s.placed.push_back(static_cast<particles::Vertex>(rng.below(1u << d)));
    const auto v = static_cast<particles::Vertex>(rng.below(1u << d));
    bool expect = true;
    for (auto q : s.placed) expect = expect && __builtin_popcount(v ^ q) >= s.k;
    CHECK(particles::placement_legal(s, v) == expect);
  }
}

TEST_CASE("ExclusivityParticles trajectories respect distance and the packing bound") {
  for (Difficulty d : kAllDifficulties) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto t = standard_template(PuzzleId::ExclusivityParticles, d, seed);
      GameState final_state;
      testing::random_playout(t, seed, &final_state);
      const auto& space = final_state.as<particles::ParticleSpace>();
      for (std::size_t a = 0; a < space.placed.size(); ++a) {
        for (std::size_t b = a + 1; b < space.placed.size(); ++b) {
          CHECK(hypercube::hamming(space.placed[a], space.placed[b]) >= space.k);
        }
      }
      CHECK(static_cast<long long>(space.placed.size()) <= particles::packing_bound(space.d, space.k));
      CHECK(particles::legal_placements(space).empty());
      // Whoever cannot place loses.
      const Player stuck = space.placed.size() % 2 == 0 ? Player::P1 : Player::P2;
      CHECK(*final_state.outcome == Outcome::win(opponent(stuck)));
    }
  }
}

TEST_CASE("Superply hint cells") {
  auto board = superply_state(6).as<superply::SuperplyBoard>();
  board.hint = {superply::Quantity::Product, superply::Relation::ContainsDigit, 6};
  using superply::Cell;
  // 16 = 4 * 4 also contains the digit.
  CHECK(superply::hint_cells(board) ==
        std::vector<Cell>{{1, 6}, {2, 3}, {3, 2}, {4, 4}, {6, 1}, {6, 6}});
  board.hint = {superply::Quantity::Sum, superply::Relation::Less, 3};
  CHECK(superply::hint_cells(board) == std::vector<Cell>{{1, 1}});
  std::fill(board.grid.begin(), board.grid.end(), 1);
  board.hint = {superply::Quantity::Sum, superply::Relation::Greater, 1};
  CHECK(superply::hint_cells(board).empty());

  CounterRng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto b = superply_state(6).as<superply::SuperplyBoard>();
    for (auto& v : b.grid) v = static_cast<int>(rng.below(3));
    if (b.full()) continue;
    const auto h = superply::draw_hint(b, rng);
    std::vector<Cell> expect;
    for (int r = 1; r <= 6; ++r) {
      for (int c = 1; c <= 6; ++c) {
        const int q = h.quantity == superply::Quantity::Sum ? r + c : r * c;
        bool ok = false;
        switch (h.relation) {
          case superply::Relation::Less: ok = q < h.param; break;
          case superply::Relation::Greater: ok = q > h.param; break;
          case superply::Relation::Equal: ok = q == h.param; break;
          case superply::Relation::ContainsDigit:
            ok = std::to_string(q).find(static_cast<char>('0' + h.param)) != std::string::npos;
            break;
        }
        if (ok && b.at(r, c) == 0) expect.push_back({r, c});
      }
    }
    CHECK(superply::hint_cells(b, h) == expect);
    CHECK(!expect.empty());
  }
}

TEST_CASE("Superply paths") {
  auto board = superply_state(5).as<superply::SuperplyBoard>();
  CHECK(!superply::has_path(board, 1));
  CHECK(!superply::has_path(board, 2));
  for (int c = 1; c <= 5; ++c) board.at(3, c) = 1;
  CHECK(superply::has_path(board, 1));
  CHECK(!superply::has_path(board, 2));

  auto diag = superply_state(5).as<superply::SuperplyBoard>();
  for (int r = 1; r <= 5; ++r) diag.at(r, 6 - r) = 2;
  CHECK(superply::has_path(diag, 2));
  CHECK(superply::has_path(diag, 2) == oracle::superply_flood(flat(diag), 5, 2));

  CounterRng rng(12);
  for (int i = 0; i < 300; ++i) {
    auto b = superply_state(4).as<superply::SuperplyBoard>();
    for (auto& v : b.grid) v = static_cast<int>(rng.below(3));
    for (int p : {1, 2}) {
      CHECK(superply::has_path(b, p) == oracle::superply_flood(flat(b), 4, p));
      CHECK(superply::completion_distance(b, p) == oracle::superply_min_completion(flat(b), 4, p));
    }
  }
}

TEST_CASE("Superply invalid selections pass the turn") {
  GameState s = superply_state(6);
  auto& board = s.as<superply::SuperplyBoard>();
  board.hint = {superply::Quantity::Sum, superply::Relation::Less, 3};
  const auto grid = board.grid;
  const auto r = step(s, superply::Claim{6, 6});
  CHECK(r.feedback.legality == Feedback::Legality::Illegal);
  CHECK(!r.feedback.terminated);
  CHECK(r.state.active_player == Player::P2);
  CHECK(r.state.as<superply::SuperplyBoard>().grid == grid);
  CHECK(r.state.turn_index == 1);
}

TEST_CASE("Superply completing a path wins") {
  GameState s = superply_state(4);
  auto& board = s.as<superply::SuperplyBoard>();
  for (int c = 1; c <= 3; ++c) board.at(2, c) = 1;
  board.hint = {superply::Quantity::Sum, superply::Relation::Equal, 6};
  const auto r = step(s, superply::Claim{2, 4});
  CHECK(r.feedback.terminated);
  CHECK(r.feedback.outcome == Outcome::win(Player::P1));
}

TEST_CASE("Superply: every full 2x2 board has a path, so ties come only from stalled play") {
  for (int code = 0; code < 16; ++code) {
    auto b = superply_state(2).as<superply::SuperplyBoard>();
    for (int i = 0; i < 4; ++i) b.grid[static_cast<std::size_t>(i)] = (code >> i & 1) ? 1 : 2;
    CHECK((superply::has_path(b, 1) || superply::has_path(b, 2)));
  }
  GameState s = superply_state(2);
  Feedback last;
  int passes = 0;
  while (!s.finished()) {
    auto r = step(s, superply::Claim{3, 3});
    last = r.feedback;
    s = r.state;
    ++passes;
  }
  CHECK(passes == 8);
  CHECK(*last.outcome == Outcome::tie());
  MatchRecord rec;
  rec.tmpl = s.tmpl;
  rec.participants = {"a", "b"};
  GameState replay = instantiate(s.tmpl);
  for (int i = 0; i < passes; ++i) {
    auto r = step(replay, superply::Claim{3, 3});
    rec.trajectory.push_back({state_hash(replay), replay.active_player, superply::Claim{3, 3}, r.feedback});
    replay = r.state;
  }
  CHECK(evaluate(rec) == std::vector<std::optional<double>>{0.5, 0.5});
  CHECK(derive_statuses(rec) == std::vector{TerminationStatus::Legal, TerminationStatus::Legal});
}

TEST_CASE("Superply claims only increase and paths persist") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto t = standard_template(PuzzleId::Superply, Difficulty::Normal, seed);
    int claims = 0;
    for (const auto& played : testing::random_playout(t, seed)) {
      const auto& b = played.before.as<superply::SuperplyBoard>();
      CHECK(std::count_if(b.grid.begin(), b.grid.end(), [](int v) { return v != 0; }) == claims);
      if (played.feedback.legal()) ++claims;
    }
  }
  auto b = superply_state(4).as<superply::SuperplyBoard>();
  for (int c = 1; c <= 4; ++c) b.at(1, c) = 1;
  CounterRng rng(2);
  for (int i = 0; i < 12; ++i) {
    const int r = static_cast<int>(rng.between(2, 4)), c = static_cast<int>(rng.between(1, 4));
    if (b.at(r, c) == 0) b.at(r, c) = 1;
    CHECK(superply::has_path(b, 1));
  }
}
