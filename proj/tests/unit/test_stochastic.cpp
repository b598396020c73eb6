#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace ppx;
using testing::error_of;

namespace {

// Critical values of the chi-square distribution at p = 0.001.
double chi_critical(int df) {
  static const std::map<int, double> table = {{1, 10.83}, {2, 13.82}, {3, 16.27}, {4, 18.47},
                                              {5, 20.52}, {6, 22.46}, {8, 26.12}, {11, 31.26}};
  return table.at(df);
}

int hidden_sum(const ruby::RubyWorld& w) {
  return std::accumulate(w.contents.begin() + w.next_box, w.contents.end(), 0);
}

}  // namespace

TEST_CASE("probe answers are set membership and always counted") {
  CounterRng rng(6);
  for (int i = 0; i < 100; ++i) {
    auto world = probes::generate(3, 1, 2, rng);
    for (int j = 0; j < 10; ++j) {
      const auto v = static_cast<hypercube::Vertex>(rng.below(8));
      const bool member = std::find(world.hidden.begin(), world.hidden.end(), v) != world.hidden.end();
      const int before = world.probes_used;
      CHECK(probes::answer(world, v) == member);
      CHECK(world.probes_used == before + 1);
    }
  }
  auto world = probes::generate(3, 1, 2, rng);
  CHECK(error_of([&] { probes::answer(world, std::vector<int>{0, 1}); }) == ErrorCode::DimensionMismatch);
  CHECK(error_of([&] { probes::score(world); }) == ErrorCode::GameUnfinished);
}

TEST_CASE("probe score bounds") {
  CounterRng rng(2);
  auto direct = probes::generate(3, 2, 2, rng);
  for (auto v : std::vector<hypercube::Vertex>(direct.hidden)) probes::answer(direct, v);
  CHECK(probes::score(direct) == 2);

  auto sweep = probes::generate(3, 2, 2, rng);
  for (hypercube::Vertex v = 0; v < 8; ++v) probes::answer(sweep, v);
  CHECK(probes::score(sweep) == 8);
}

TEST_CASE("probe example: a yes at [0, 0] leaves one diagonal configuration") {
  const std::vector<std::vector<hypercube::Vertex>> family = {
      {hypercube::from_coords({0, 0}, 2), hypercube::from_coords({1, 1}, 2)},
      {hypercube::from_coords({0, 1}, 2), hypercube::from_coords({1, 0}, 2)},
  };
  const std::vector<probes::ProbeRecord> history = {{hypercube::from_coords({0, 0}, 2), true}};
  std::vector<std::vector<hypercube::Vertex>> left;
  for (const auto& c : family) {
    if (probes::consistent(c, history)) left.push_back(c);
  }
  REQUIRE(left.size() == 1);
  const auto& remaining = left.front();
  CHECK(std::count_if(remaining.begin(), remaining.end(), [](auto v) { return v != 0; }) == 1);
}

TEST_CASE("optimal expected probe count for d=2, k=1, two particles") {
  const auto configs = probes::all_configurations(2, 1, 2);
  CHECK(configs.size() == 6);
  const double best = oracle::probes_optimal(2, configs);
  // The later of two uniformly placed particles sits at position 2, 3 or 4
  // of any probe order with probabilities 1/6, 2/6, 3/6.
  CHECK(best == doctest::Approx(20.0 / 6.0));

  // The greedy prober attains it.
  double total = 0.0;
  for (const auto& config : configs) {
    probes::ProbeWorld world;
    world.d = 2;
    world.k = 1;
    world.num_particles = 2;
    world.hidden = config;
    while (!world.all_found()) {
      probes::answer(world, strategies::probes_greedy(probes::public_view(world)));
    }
    total += probes::score(world);
  }
  CHECK(total / 6.0 == doctest::Approx(best));
}

TEST_CASE("probe generator respects distance and covers every configuration") {
  for (int k : {1, 2}) {
    const auto all = probes::all_configurations(3, k, 2);
    std::map<std::vector<hypercube::Vertex>, int> seen;
    CounterRng rng(static_cast<std::uint64_t>(k));
    const int draws = 200 * static_cast<int>(all.size());
    for (int i = 0; i < draws; ++i) {
      const auto w = probes::generate(3, k, 2, rng);
      CHECK(w.hidden.size() == 2);
      CHECK(hypercube::hamming(w.hidden[0], w.hidden[1]) >= k);
      ++seen[w.hidden];
    }
    CHECK(seen.size() == all.size());
  }
  CHECK(error_of([] {
          CounterRng rng(1);
          probes::generate(2, 3, 2, rng);
        }) == ErrorCode::InvalidTemplate);
}

TEST_CASE("probe matches end on the last yes and score by probe count") {
  for (Difficulty d : kAllDifficulties) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto t = standard_template(PuzzleId::ExclusivityProbes, d, seed);
      GameState final_state;
      const auto played = testing::random_playout(t, seed, &final_state);
      const auto& w = final_state.as<probes::ProbeWorld>();
      CHECK(w.all_found());
      CHECK(*final_state.outcome == Outcome::solo(w.probes_used));
      CHECK(static_cast<int>(played.size()) == w.probes_used);
    }
  }
}

TEST_CASE("ruby resolution") {
  auto w = ruby::from_contents({11, 9, 10});
  CHECK(w.total == 30);
  CHECK(ruby::resolve(w, 10) == 10);
  CHECK(ruby::resolve(w, 8) == 8);
  CHECK(ruby::resolve(w, 12) == 0);
  CHECK(w.collected == 18);
  CHECK(error_of([&] { ruby::resolve(w, 1); }) == ErrorCode::NoBoxesLeft);

  auto zero = ruby::from_contents({4, 2});
  CHECK(ruby::resolve(zero, 0) == 0);
  CHECK(zero.next_box == 1);

  for (int content = 0; content <= 5; ++content) {
    for (int request = 0; request <= 6; ++request) {
      auto b = ruby::from_contents({content});
      CHECK(ruby::resolve(b, request) == (request <= content ? request : 0));
    }
  }
}

TEST_CASE("ruby conservation along trajectories") {
  for (Difficulty d : kAllDifficulties) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto t = standard_template(PuzzleId::RubyRisks, d, seed);
      GameState final_state;
      const auto played = testing::random_playout(t, seed, &final_state);
      for (const auto& p : played) {
        const auto& w = p.before.as<ruby::RubyWorld>();
        CHECK(w.collected + hidden_sum(w) + w.forfeited == w.total);
      }
      const auto& w = final_state.as<ruby::RubyWorld>();
      CHECK(w.collected + w.forfeited == w.total);
      CHECK(std::accumulate(w.contents.begin(), w.contents.end(), 0) == w.total);
    }
  }
}

TEST_CASE("ruby compositions are uniform") {
  // 3 boxes, 4 rubies: C(6, 2) = 15 compositions.
  std::map<std::vector<int>, int> counts;
  CounterRng rng(17);
  for (int i = 0; i < 15000; ++i) ++counts[ruby::generate(3, 4, rng).contents];
  REQUIRE(counts.size() == 15);
  std::vector<int> freq;
  for (auto& [c, n] : counts) freq.push_back(n);
  CHECK(oracle::chi_square_uniform(freq) < 36.12);  // df 14, p = 0.001
  CHECK(ruby::compositions(4, 3) == 15.0);
}

TEST_CASE("ruby posterior over the hidden remainder") {
  // Brute force over all compositions of 6 into 3 boxes.
  std::vector<std::vector<int>> worlds;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) worlds.push_back({a, b, 6 - a - b});

  for (int req = 0; req <= 6; ++req) {
    for (bool success : {true, false}) {
      ruby::RubyPublic view;
      view.num_boxes = 3;
      view.total = 6;
      view.next_box = 1;
      view.collected = success ? req : 0;
      view.history = {{req, success ? req : 0}};
      std::vector<double> expect(7, 0.0);
      double z = 0.0;
      for (const auto& w : worlds) {
        const bool fits = req <= w[0];
        if (success != fits) continue;
        if (!success && req == 0) continue;
        expect[static_cast<std::size_t>(w[1] + w[2])] += 1.0;
        z += 1.0;
      }
      if (z == 0.0) continue;
      const auto got = ruby::remaining_sum_posterior(view);
      for (int s = 0; s <= 6; ++s) {
        const double g = s < static_cast<int>(got.size()) ? got[static_cast<std::size_t>(s)] : 0.0;
        CHECK(g == doctest::Approx(expect[static_cast<std::size_t>(s)] / z));
      }
    }
  }
}

TEST_CASE("ruby posterior sampling matches the exact posterior") {
  ruby::RubyPublic view;
  view.num_boxes = 3;
  view.total = 6;
  view.next_box = 1;
  view.collected = 0;
  view.history = {{3, 0}};  // the first box held fewer than 3
  std::map<std::vector<int>, double> exact;
  double z = 0.0;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; a + b <= 6; ++b) {
      exact[{b, 6 - a - b}] += 1.0;
      z += 1.0;
    }
  }
  std::map<std::vector<int>, int> counts;
  CounterRng rng(9);
  const int draws = 40000;
  for (int i = 0; i < draws; ++i) ++counts[ruby::sample_unopened(view, rng)];
  double chi = 0.0;
  for (auto& [k, w] : exact) {
    const double e = draws * w / z;
    const double o = counts.count(k) ? counts[k] : 0;
    chi += (o - e) * (o - e) / e;
  }
  for (auto& [k, n] : counts) CHECK(exact.count(k) == 1);
  CHECK(exact.size() == 18);
  CHECK(chi < 40.79);  // df 17, p = 0.001
}

TEST_CASE("beat or bomb round awards") {
  using beatorbomb::Action;
  using beatorbomb::Play;
  CHECK(beatorbomb::round_awards({5, Action::Compete}, {13, Action::GiveUp}) == std::pair{5, 0});
  CHECK(beatorbomb::round_awards({5, Action::GiveUp}, {13, Action::GiveUp}) == std::pair{0, 0});
  CHECK(beatorbomb::round_awards({9, Action::Compete}, {3, Action::Compete}) == std::pair{12, 0});
  CHECK(beatorbomb::round_awards({3, Action::Compete}, {9, Action::Compete}) == std::pair{0, 12});
  CHECK(beatorbomb::round_awards({7, Action::Compete}, {7, Action::Compete}) == std::pair{0, 0});
  CHECK(beatorbomb::round_awards({2, Action::GiveUp}, {11, Action::Compete}) == std::pair{0, 11});

  beatorbomb::CardDuelState s;
  s.hands = {std::vector<int>{2, 5}, std::vector<int>{3, 4}};
  CHECK(error_of([&] { beatorbomb::resolve_round(s, {6, Action::Compete}, {3, Action::Compete}); }) ==
        ErrorCode::CardNotHeld);
  beatorbomb::resolve_round(s, {5, Action::Compete}, {3, Action::Compete});
  CHECK(s.hands[0] == std::vector<int>{2});
  CHECK(s.hands[1] == std::vector<int>{4});
  CHECK(s.points == std::array<int, 2>{8, 0});

  CHECK(beatorbomb::card_label(1) == "A");
  CHECK(beatorbomb::card_label(12) == "Q");
  CHECK(beatorbomb::parse_card("K") == 13);
  CHECK(beatorbomb::parse_card("10") == 10);
  CHECK(!beatorbomb::parse_card("14").has_value());
}

TEST_CASE("beat or bomb deals are balanced and drawn from one deck") {
  CounterRng rng(31);
  for (int num : {5, 8}) {
    for (int i = 0; i < 200; ++i) {
      const auto s = beatorbomb::deal(num, rng);
      CHECK(s.hands[0].size() == static_cast<std::size_t>(num));
      CHECK(s.hands[1].size() == static_cast<std::size_t>(num));
      const int a = std::accumulate(s.hands[0].begin(), s.hands[0].end(), 0);
      const int b = std::accumulate(s.hands[1].begin(), s.hands[1].end(), 0);
      CHECK(a == b);
      CHECK(s.hand_total == a);
      std::map<int, int> used;
      for (const auto& h : s.hands)
        for (int c : h) ++used[c];
      for (auto [v, n] : used) {
        CHECK(v >= 1);
        CHECK(v <= 13);
        CHECK(n <= 4);
      }
    }
  }
}

TEST_CASE("beat or bomb rounds award one of the allowed totals") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto t = standard_template(PuzzleId::BeatOrBombSto, Difficulty::Normal, seed);
    GameState final_state;
    testing::random_playout(t, seed, &final_state);
    const auto& st = final_state.as<beatorbomb::CardDuelState>();
    CHECK(st.hands[0].empty());
    CHECK(st.hands[1].empty());
    int p1 = 0, p2 = 0;
    for (const auto& r : st.rounds) {
      const int a = r.p1.card, b = r.p2.card, total = r.award1 + r.award2;
      CHECK((total == 0 || total == std::min(a, b) || total == std::max(a, b) || total == a + b));
      p1 += r.award1;
      p2 += r.award2;
    }
    CHECK(st.points == std::array<int, 2>{p1, p2});
    const auto expect = p1 > p2 ? Outcome::win(Player::P1) : p2 > p1 ? Outcome::win(Player::P2) : Outcome::tie();
    CHECK(*final_state.outcome == expect);
  }
}

TEST_CASE("bag draws") {
  SUBCASE("the two-bag example") {
    bool saw_four = false;
    for (std::uint64_t seed = 1; seed <= 20 && !saw_four; ++seed) {
      auto world = bags::from_contents({{1, 2}, {3, 4}}, {1, 0}, 2, false, CounterRng(seed));
      CHECK(bags::posterior(bags::public_view(world)).size() == 2);
      if (bags::draw(world, 0, 0) != 4) continue;
      saw_four = true;
      CHECK(world.residual[0] == std::vector<int>{3});
      const auto post = bags::posterior(bags::public_view(world));
      REQUIRE(post.size() == 1);
      CHECK(post[0].perm == std::vector<int>{1, 0});
      CHECK(post[0].weight == 1.0);
    }
    CHECK(saw_four);
  }
  SUBCASE("forced draw and errors") {
    auto world = bags::from_contents({{7}}, {0}, 2, false, CounterRng(1));
    CHECK(bags::draw(world, 0, 0) == 7);
    CHECK(error_of([&] { bags::draw(world, 0, 0); }) == ErrorCode::EmptyBag);
    CHECK(error_of([&] { bags::draw(world, 1, 0); }) == ErrorCode::IndexOutOfRange);
    auto spent = bags::from_contents({{1, 2, 3}}, {0}, 1, false, CounterRng(1));
    bags::draw(spent, 0, 0);
    CHECK(error_of([&] { bags::draw(spent, 0, 0); }) == ErrorCode::NoPicksLeft);
  }
  SUBCASE("draws are uniform over the residual coins") {
    std::vector<int> counts(5, 0);
    for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
      auto world = bags::from_contents({{1, 2, 3, 4, 5}}, {0}, 3, false, CounterRng(seed));
      bags::draw(world, 0, 0);
      ++counts[static_cast<std::size_t>(bags::draw(world, 0, 0) - 1)];
    }
    CHECK(oracle::chi_square_uniform(counts) < chi_critical(4));
  }
}

TEST_CASE("bag posterior matches permutation filtering") {
  CounterRng rng(44);
  for (int i = 0; i < 200; ++i) {
    const int bag_count = static_cast<int>(rng.between(2, 4));
    auto world = bags::generate(bag_count, 3, 3, false, rng);
    const int draws = static_cast<int>(rng.between(0, 3));
    std::vector<std::pair<int, int>> log;
    for (int j = 0; j < draws; ++j) {
      std::vector<int> open;
      for (int b = 0; b < bag_count; ++b) {
        if (!world.residual[static_cast<std::size_t>(b)].empty()) open.push_back(b);
      }
      const int idx = rng.pick(open);
      log.emplace_back(idx, bags::draw(world, idx, 0));
    }
    const auto view = bags::public_view(world);
    const auto expect = oracle::bag_posterior(view.contents, log);
    const auto got = bags::posterior(view);
    REQUIRE(got.size() == expect.size());
    for (const auto& h : got) {
      REQUIRE(expect.count(h.perm) == 1);
      CHECK(h.weight == doctest::Approx(expect.at(h.perm)));
    }
    // Drawn coins plus residual coins reproduce each mapped bag.
    const auto drawn = view.drawn_by_index();
    for (int b = 0; b < bag_count; ++b) {
      auto all = drawn[static_cast<std::size_t>(b)];
      const auto& rest = world.residual[static_cast<std::size_t>(b)];
      all.insert(all.end(), rest.begin(), rest.end());
      std::sort(all.begin(), all.end());
      CHECK(all == world.contents[static_cast<std::size_t>(world.perm[static_cast<std::size_t>(b)])]);
    }
  }
}

TEST_CASE("seeded hidden state is reproducible") {
  for (PuzzleId p : {PuzzleId::ExclusivityProbes, PuzzleId::RubyRisks, PuzzleId::BeatOrBombSto,
                     PuzzleId::MaxTarget, PuzzleId::LargerTarget}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto t = standard_template(p, Difficulty::Normal, seed);
      GameState a, b;
      const auto pa = testing::random_playout(t, seed, &a);
      const auto pb = testing::random_playout(t, seed, &b);
      CHECK(a == b);
      REQUIRE(pa.size() == pb.size());
      for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i].feedback == pb[i].feedback);
    }
  }
}

TEST_CASE("LargerTarget alternates picks with equal budgets") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto t = standard_template(PuzzleId::LargerTarget, Difficulty::Normal, seed);
    GameState final_state;
    const auto played = testing::random_playout(t, seed, &final_state);
    const auto max_guess = t.param("max_guess");
    CHECK(static_cast<std::int64_t>(played.size()) == 2 * max_guess);
    for (std::size_t i = 0; i < played.size(); ++i) {
      CHECK(played[i].before.active_player == (i % 2 == 0 ? Player::P1 : Player::P2));
    }
    const auto& w = final_state.as<bags::BagWorld>();
    const auto expect = w.totals[0] > w.totals[1]   ? Outcome::win(Player::P1)
                        : w.totals[1] > w.totals[0] ? Outcome::win(Player::P2)
                                                    : Outcome::tie();
    CHECK(*final_state.outcome == expect);
  }
}
