#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "helpers.hpp"
#include "ppx/core/template.hpp"
#include "ppx/scoring/scoring.hpp"

using namespace ppx;
using namespace ppx::scoring;
using testing::error_of;

namespace {

// Direct formula, written out independently of the library.
double expected_score(double ra, double rb) { return 1.0 / (1.0 + std::pow(10.0, (rb - ra) / 400.0)); }

MatchRecord solo_record(PuzzleId p, std::uint64_t seed, const std::string& who, std::optional<double> raw,
                        TerminationStatus st = TerminationStatus::Legal) {
  MatchRecord rec;
  rec.tmpl = standard_template(p, Difficulty::Easy, seed);
  rec.participants = {who};
  rec.statuses = {st};
  rec.raw_scores = {raw};
  return rec;
}

MatchRecord duel_record(const std::string& a, const std::string& b, double s_a,
                        TerminationStatus sa = TerminationStatus::Legal,
                        TerminationStatus sb = TerminationStatus::Legal) {
  MatchRecord rec;
  rec.tmpl = standard_template(PuzzleId::CardNim, Difficulty::Easy, 1);
  rec.participants = {a, b};
  rec.statuses = {sa, sb};
  rec.raw_scores = {s_a, 1.0 - s_a};
  return rec;
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(normalize(std::vector<double>{10, 5}, ScoreDirection::HigherBetter) == std::vector<double>{1.0, 0.5});
  CHECK(normalize(std::vector<double>{2, 4}, ScoreDirection::LowerBetter) == std::vector<double>{1.0, 0.5});
  CHECK(normalize(std::vector<double>{7}, ScoreDirection::HigherBetter) == std::vector<double>{1.0});
  CHECK(normalize(std::vector<double>{7}, ScoreDirection::LowerBetter) == std::vector<double>{1.0});
  CHECK(normalize(std::vector<double>{0, 0}, ScoreDirection::HigherBetter) == std::vector<double>{0.0, 0.0});
  CHECK(normalize(std::vector<double>{0, 0.5, 1}, ScoreDirection::HigherBetter, true) ==
        std::vector<double>{0, 0.5, 1});

  CHECK(error_of([] { normalize(std::vector<double>{}, ScoreDirection::HigherBetter); }) == ErrorCode::InvalidInput);
  CHECK(error_of([] { normalize(std::vector<double>{1, NAN}, ScoreDirection::HigherBetter); }) ==
        ErrorCode::InvalidInput);
  CHECK(error_of([] { normalize(std::vector<double>{0, 3}, ScoreDirection::LowerBetter); }) ==
        ErrorCode::InvalidInput);

  const std::vector<std::optional<double>> partial = {std::nullopt, 8.0, 4.0};
  CHECK(normalize(partial, ScoreDirection::HigherBetter) == std::vector<double>{0.0, 1.0, 0.5});
  CHECK(normalize(partial, ScoreDirection::LowerBetter) == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(normalize(std::vector<std::optional<double>>{std::nullopt}, ScoreDirection::HigherBetter) ==
        std::vector<double>{0.0});

  SUBCASE("range and scale invariance") {
    CounterRng rng(3);
    for (int i = 0; i < 500; ++i) {
      std::vector<double> raws(static_cast<std::size_t>(rng.between(1, 8)));
      for (auto& r : raws) r = 0.1 + 100.0 * rng.unit();
      const double c = 0.01 + 50.0 * rng.unit();
      auto scaled = raws;
      for (auto& r : scaled) r *= c;
      for (auto dir : {ScoreDirection::HigherBetter, ScoreDirection::LowerBetter}) {
        const auto a = normalize(raws, dir);
        const auto b = normalize(scaled, dir);
        CHECK(*std::max_element(a.begin(), a.end()) == doctest::Approx(1.0));
        for (std::size_t k = 0; k < a.size(); ++k) {
          CHECK(a[k] >= 0.0);
          CHECK(a[k] <= 1.0);
          CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("Elo formulas") {
  CHECK(elo_expected(1000, 1000) == 0.5);
  CHECK(elo_expected(1400, 1000) == doctest::Approx(1.0 / 1.1).epsilon(1e-12));
  CHECK(elo_expected(1400, 1000) == doctest::Approx(0.9091).epsilon(1e-4));
  CHECK(elo_expected(1000, 1200) == doctest::Approx(0.2403).epsilon(1e-3));
  CHECK(elo_update(1000, 1000, 1.0) == 1016.0);
  CHECK(elo_update(1000, 1000, 0.5) == 1000.0);
  CHECK(elo_update(1000, 1000, 0.0) == 984.0);

  CounterRng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double ra = 600 + 800 * rng.unit();
    const double rb = 600 + 800 * rng.unit();
    const double s = 0.5 * static_cast<double>(rng.below(3));
    const double ea = elo_expected(ra, rb);
    CHECK(ea > 0.0);
    CHECK(ea < 1.0);
    CHECK(ea + elo_expected(rb, ra) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ea == doctest::Approx(expected_score(ra, rb)).epsilon(1e-12));
    const double na = elo_update(ra, rb, s);
    const double nb = elo_update(rb, ra, 1.0 - s);
    CHECK(na + nb == doctest::Approx(ra + rb).epsilon(1e-12));
    CHECK(na == doctest::Approx(ra + 32.0 * (s - expected_score(ra, rb))).epsilon(1e-12));
  }
}

TEST_CASE("solo results become pairwise matches") {
  auto m = solo_to_matches({{{"A", 1.0}, {"B", 0.5}}});
  REQUIRE(m.size() == 1);
  CHECK(m[0] == MatchResult{"A", "B", 1.0});
  m = solo_to_matches({{{"A", 0.5}, {"B", 0.5}}});
  CHECK(m[0].s_a == 0.5);
  CHECK(solo_to_matches({{{"A", 0.1}, {"B", 0.2}, {"C", 0.3}}}).size() == 3);
  CHECK(solo_to_matches({{{"A", 0.1}, {"B", 0.2}, {"C", 0.3}}, {{"A", 1}, {"B", 1}}}).size() == 4);

  SUBCASE("relabeling") {
    CounterRng rng(5);
    const std::vector<std::string> names = {"p", "q", "r", "s"};
    const std::map<std::string, std::string> rename = {{"p", "z"}, {"q", "a"}, {"r", "m"}, {"s", "b"}};
    for (int i = 0; i < 100; ++i) {
      std::map<std::string, double> seed, renamed;
      for (const auto& n : names) {
        seed[n] = 0.25 * static_cast<double>(rng.below(5));
        renamed[rename.at(n)] = seed[n];
      }
      auto key = [](const MatchResult& r) {
        return r.a < r.b ? std::tuple{r.a, r.b, r.s_a} : std::tuple{r.b, r.a, 1.0 - r.s_a};
      };
      std::vector<std::tuple<std::string, std::string, double>> x, y;
      for (const auto& r : solo_to_matches({seed})) {
        x.push_back(key({rename.at(r.a), rename.at(r.b), r.s_a}));
      }
      for (const auto& r : solo_to_matches({renamed})) y.push_back(key(r));
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      CHECK(x == y);
    }
  }
}

TEST_CASE("tournament Elo") {
  auto r = tournament_elo({{"A", "B", 1.0}}, 1, 0);
  CHECK(r["A"].rating == 1016.0);
  CHECK(r["B"].rating == 984.0);
  CHECK(r["A"].lo == r["A"].rating);
  CHECK(r["A"].hi == r["A"].rating);

  r = tournament_elo({{"A", "B", 0.5}, {"B", "C", 0.5}, {"C", "A", 0.5}}, 9, 200);
  for (const auto& [name, rating] : r) {
    CHECK(rating.rating == 1000.0);
    CHECK(rating.hi - rating.lo == 0.0);
  }
  CHECK(error_of([] { tournament_elo({}, 1); }) == ErrorCode::InvalidInput);

  SUBCASE("conservation, determinism and interval") {
    CounterRng rng(21);
    std::vector<MatchResult> log;
    const std::vector<std::string> names = {"a", "b", "c", "d"};
    for (int i = 0; i < 300; ++i) {
      const auto x = rng.below(4);
      auto y = rng.below(3);
      if (y >= x) ++y;
      // Earlier names are stronger.
      const double s = rng.chance(x < y ? 0.7 : 0.3) ? 1.0 : 0.0;
      log.push_back({names[x], names[y], s});
    }
    const auto seq = sequential_elo(log);
    const double mass = std::accumulate(seq.begin(), seq.end(), 0.0,
                                        [](double t, const auto& kv) { return t + kv.second; });
    CHECK(mass == doctest::Approx(4000.0).epsilon(1e-9));
    const auto t1 = tournament_elo(log, 4, 100);
    const auto t2 = tournament_elo(log, 4, 100);
    double total = 0.0;
    for (const auto& n : names) {
      CHECK(t1.at(n).rating == t2.at(n).rating);
      CHECK(t1.at(n).lo <= t1.at(n).hi);
      CHECK(t1.at(n).lo < t1.at(n).hi);
      total += t1.at(n).rating;
    }
    CHECK(total == doctest::Approx(4000.0).epsilon(1e-9));
    CHECK(t1.at("a").rating > t1.at("d").rating);
  }
}

TEST_CASE("win matrix") {
  std::vector<MatchResult> log;
  for (int i = 0; i < 2; ++i) log.push_back({"x", "y", 1.0});
  for (int i = 0; i < 5; ++i) log.push_back({"y", "x", 1.0});
  for (int i = 0; i < 3; ++i) log.push_back({"x", "y", 0.5});
  const auto m = win_matrix(log);
  REQUIRE(m.participants == std::vector<std::string>{"x", "y"});
  CHECK(*m.rate(0, 1) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
  CHECK(std::abs(*m.rate(0, 1) - 0.2857) < 1e-4);
  CHECK(*m.rate(1, 0) == doctest::Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK(m.ties[0][1] == 3);
  CHECK(!m.rate(0, 0).has_value());
  CHECK(!win_matrix({{"x", "y", 0.5}}).rate(0, 1).has_value());

  SUBCASE("complement property") {
    CounterRng rng(8);
    std::vector<MatchResult> random_log;
    const std::vector<std::string> names = {"a", "b", "c", "d", "e"};
    for (int i = 0; i < 200; ++i) {
      random_log.push_back({rng.pick(names), rng.pick(names), 0.5 * static_cast<double>(rng.below(3))});
    }
    const auto w = win_matrix(random_log);
    for (std::size_t i = 0; i < w.participants.size(); ++i) {
      CHECK(!w.rate(i, i).has_value());
      for (std::size_t j = 0; j < w.participants.size(); ++j) {
        if (i == j) continue;
        CHECK(w.rate(i, j).has_value() == w.rate(j, i).has_value());
        if (w.rate(i, j)) CHECK(*w.rate(i, j) + *w.rate(j, i) == doctest::Approx(1.0));
      }
    }
  }

  SUBCASE("from records") {
    const auto w = win_matrix(std::vector<MatchRecord>{duel_record("x", "y", 1.0), duel_record("y", "x", 1.0),
                                                      duel_record("x", "y", 0.5)});
    CHECK(*w.rate(0, 1) == 0.5);
    CHECK(w.ties[0][1] == 1);
  }
}

TEST_CASE("status distribution") {
  std::vector<MatchRecord> recs;
  for (int i = 0; i < 10; ++i) {
    recs.push_back(duel_record("m", "n", 1.0, TerminationStatus::Legal,
                               i == 0 ? TerminationStatus::RuleViolation : TerminationStatus::Legal));
  }
  const auto dist = status_distribution(recs);
  CHECK(dist.at("m")[static_cast<std::size_t>(TerminationStatus::Legal)] == 1.0);
  CHECK(dist.at("n")[static_cast<std::size_t>(TerminationStatus::RuleViolation)] == doctest::Approx(0.1));
  CHECK(dist.at("n")[static_cast<std::size_t>(TerminationStatus::Legal)] == doctest::Approx(0.9));

  CounterRng rng(2);
  std::vector<MatchRecord> random_recs;
  for (int i = 0; i < 300; ++i) {
    random_recs.push_back(duel_record(rng.chance(0.5) ? "u" : "v", rng.chance(0.5) ? "w" : "v", 0.5,
                                      rng.pick(std::vector(kAllStatuses.begin(), kAllStatuses.end())),
                                      rng.pick(std::vector(kAllStatuses.begin(), kAllStatuses.end()))));
  }
  for (const auto& [name, f] : status_distribution(random_recs)) {
    CHECK(std::accumulate(f.begin(), f.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("score rows and record-derived matches") {
  const std::vector<MatchRecord> recs = {
      solo_record(PuzzleId::ExclusivityProbes, 1, "a", 4.0),
      solo_record(PuzzleId::ExclusivityProbes, 1, "b", 8.0),
      solo_record(PuzzleId::ExclusivityProbes, 1, "c", std::nullopt, TerminationStatus::Timeout),
      solo_record(PuzzleId::OptimalTouring, 2, "a", 100.0),
      solo_record(PuzzleId::OptimalTouring, 2, "b", 300.0),
      duel_record("a", "b", 0.0),
  };
  const auto rows = score_rows(recs);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0].normalized == 1.0);
  CHECK(rows[1].normalized == 0.5);
  CHECK(rows[2].normalized == 0.0);
  CHECK(rows[2].status == TerminationStatus::Timeout);
  CHECK(rows[3].normalized == doctest::Approx(1.0 / 3.0));
  CHECK(rows[4].normalized == 1.0);
  CHECK(rows[5].normalized == 0.0);
  CHECK(rows[6].normalized == 1.0);

  const auto means = mean_scores(rows);
  CHECK(means.at("a") == doctest::Approx((1.0 + 1.0 / 3.0 + 0.0) / 3.0));
  CHECK(means.at("c") == 0.0);

  const auto matches = matches_from_records(recs);
  // One duel plus C(3,2) probes pairs plus one touring pair.
  CHECK(matches.size() == 5);
  // The duel and the touring pair.
  CHECK(std::count(matches.begin(), matches.end(), MatchResult{"a", "b", 0.0}) == 2);
  CHECK(std::count(matches.begin(), matches.end(), MatchResult{"a", "b", 1.0}) == 1);
  CHECK(std::count(matches.begin(), matches.end(), MatchResult{"b", "c", 1.0}) == 1);

  const auto csv = score_rows_csv(rows);
  CHECK(csv.rfind("participant,puzzle,difficulty,seed,seat,raw,normalized,status\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  const auto elo = tournament_elo(matches, 1, 20);
  const auto summary = summary_csv(means, elo);
  CHECK(summary.rfind("participant,mean_normalized,elo,elo_lo,elo_hi\n", 0) == 0);
  CHECK(summary_pretty(means, elo).find("95% interval") != std::string::npos);
  CHECK(win_matrix_csv(win_matrix(matches)).rfind("participant,a,b,c\n", 0) == 0);
  CHECK(status_csv(status_distribution(recs)).find("Timeout") != std::string::npos);
}

TEST_CASE("two-player raw scores") {
  for (PuzzleId p : kAllPuzzles) {
    if (!is_two_player(p)) continue;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto t = standard_template(p, seed % 2 ? Difficulty::Easy : Difficulty::Normal, seed);
      const auto rec = testing::make_record(t, testing::random_playout(t, seed));
      REQUIRE(rec.raw_scores.size() == 2);
      const double a = *rec.raw_scores[0];
      CHECK((a == 0.0 || a == 0.5 || a == 1.0));
      CHECK(a + *rec.raw_scores[1] == 1.0);
    }
  }
}
