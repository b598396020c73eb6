#include "ppx/scoring/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "ppx/core/errors.hpp"
#include "ppx/core/rng.hpp"

namespace ppx::scoring {

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Linear interpolation between closest ranks.
double percentile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  return values[lo] + (values[hi] - values[lo]) * (pos - static_cast<double>(lo));
}

std::map<std::string, double> shuffled_elo(std::vector<MatchResult> log, CounterRng rng) {
  rng.shuffle(log);
  return sequential_elo(log);
}

}  // namespace

std::vector<double> normalize(const std::vector<double>& raws, ScoreDirection direction,
                              bool two_player) {
  if (raws.empty()) fail(ErrorCode::InvalidInput, "normalize: no participants");
  for (double r : raws) {
    if (!std::isfinite(r)) fail(ErrorCode::InvalidInput, "normalize: non-finite raw score");
    if (!two_player && direction == ScoreDirection::LowerBetter && r <= 0.0) {
      fail(ErrorCode::InvalidInput, "normalize: lower-is-better raw scores must be positive");
    }
  }
  if (two_player) return raws;
  std::vector<double> out(raws.size(), 0.0);
  if (direction == ScoreDirection::HigherBetter) {
    const double best = *std::max_element(raws.begin(), raws.end());
    if (best <= 0.0) return out;
    for (std::size_t i = 0; i < raws.size(); ++i) out[i] = std::max(0.0, raws[i]) / best;
  } else {
    const double best = *std::min_element(raws.begin(), raws.end());
    for (std::size_t i = 0; i < raws.size(); ++i) out[i] = best / raws[i];
  }
  return out;
}

std::vector<double> normalize(const std::vector<std::optional<double>>& raws,
                              ScoreDirection direction, bool two_player) {
  if (raws.empty()) fail(ErrorCode::InvalidInput, "normalize: no participants");
  std::vector<double> present;
  for (const auto& r : raws) {
    if (r) present.push_back(*r);
  }
  std::vector<double> out(raws.size(), 0.0);
  if (present.empty()) return out;
  const std::vector<double> scaled = normalize(present, direction, two_player);
  std::size_t k = 0;
  for (std::size_t i = 0; i < raws.size(); ++i) {
    if (raws[i]) out[i] = scaled[k++];
  }
  return out;
}

double elo_expected(double r_a, double r_b) {
  return 1.0 / (1.0 + std::pow(10.0, (r_b - r_a) / 400.0));
}

double elo_update(double r_a, double r_b, double s_a) {
  return r_a + kEloK * (s_a - elo_expected(r_a, r_b));
}

std::vector<MatchResult> solo_to_matches(const std::vector<std::map<std::string, double>>& per_seed) {
  std::vector<MatchResult> out;
  for (const auto& scores : per_seed) {
    for (auto a = scores.begin(); a != scores.end(); ++a) {
      for (auto b = std::next(a); b != scores.end(); ++b) {
        const double s = a->second > b->second ? 1.0 : a->second < b->second ? 0.0 : 0.5;
        out.push_back({a->first, b->first, s});
      }
    }
  }
  return out;
}

std::map<std::string, double> sequential_elo(const std::vector<MatchResult>& log) {
  std::map<std::string, double> r;
  for (const auto& m : log) {
    r.emplace(m.a, kInitialRating);
    r.emplace(m.b, kInitialRating);
  }
  for (const auto& m : log) {
    if (m.a == m.b) continue;
    const double ra = r[m.a];
    const double rb = r[m.b];
    r[m.a] = elo_update(ra, rb, m.s_a);
    r[m.b] = elo_update(rb, ra, 1.0 - m.s_a);
  }
  return r;
}

std::map<std::string, Rating> tournament_elo(const std::vector<MatchResult>& log,
                                             std::uint64_t ordering_seed, int resamples) {
  if (log.empty()) fail(ErrorCode::InvalidInput, "tournament_elo: empty match log");
  const CounterRng base = CounterRng::keyed({ordering_seed, fnv1a64("elo")});
  std::map<std::string, Rating> out;
  for (const auto& [name, value] : shuffled_elo(log, base)) out[name] = {value, value, value};
  if (resamples <= 0) return out;
  std::map<std::string, std::vector<double>> samples;
  for (int i = 0; i < resamples; ++i) {
    for (const auto& [name, value] : shuffled_elo(log, base.derive(static_cast<std::uint64_t>(i) + 1))) {
      samples[name].push_back(value);
    }
  }
  for (auto& [name, values] : samples) {
    out[name].lo = percentile(values, 0.025);
    out[name].hi = percentile(values, 0.975);
  }
  return out;
}

std::optional<double> WinMatrix::rate(std::size_t i, std::size_t j) const {
  if (i == j) return std::nullopt;
  const int decisive = wins[i][j] + wins[j][i];
  if (decisive == 0) return std::nullopt;
  return static_cast<double>(wins[i][j]) / decisive;
}

WinMatrix win_matrix(const std::vector<MatchResult>& log) {
  WinMatrix m;
  std::set<std::string> names;
  for (const auto& r : log) {
    names.insert(r.a);
    names.insert(r.b);
  }
  m.participants.assign(names.begin(), names.end());
  const std::size_t n = m.participants.size();
  m.wins.assign(n, std::vector<int>(n, 0));
  m.ties.assign(n, std::vector<int>(n, 0));
  auto index = [&](const std::string& name) {
    return static_cast<std::size_t>(
        std::lower_bound(m.participants.begin(), m.participants.end(), name) -
        m.participants.begin());
  };
  for (const auto& r : log) {
    if (r.a == r.b) continue;
    const std::size_t a = index(r.a);
    const std::size_t b = index(r.b);
    if (r.s_a > 0.5) {
      ++m.wins[a][b];
    } else if (r.s_a < 0.5) {
      ++m.wins[b][a];
    } else {
      ++m.ties[a][b];
      ++m.ties[b][a];
    }
  }
  return m;
}

WinMatrix win_matrix(const std::vector<MatchRecord>& records) {
  std::vector<MatchResult> log;
  for (const auto& rec : records) {
    if (rec.seats() != 2 || rec.raw_scores.size() != 2 || !rec.raw_scores[0]) continue;
    log.push_back({rec.participants[0], rec.participants[1], *rec.raw_scores[0]});
  }
  return win_matrix(log);
}

std::map<std::string, StatusFractions> status_distribution(const std::vector<MatchRecord>& records) {
  std::map<std::string, std::array<int, kAllStatuses.size()>> counts;
  for (const auto& rec : records) {
    for (int seat = 0; seat < rec.seats(); ++seat) {
      const auto s = static_cast<std::size_t>(seat);
      const TerminationStatus status =
          s < rec.statuses.size() ? rec.statuses[s] : TerminationStatus::Legal;
      ++counts[rec.participants[s]][static_cast<std::size_t>(status)];
    }
  }
  std::map<std::string, StatusFractions> out;
  for (const auto& [name, c] : counts) {
    const int total = std::accumulate(c.begin(), c.end(), 0);
    StatusFractions f{};
    for (std::size_t i = 0; i < c.size(); ++i) f[i] = static_cast<double>(c[i]) / total;
    out[name] = f;
  }
  return out;
}

std::vector<ScoreRow> score_rows(const std::vector<MatchRecord>& records) {
  std::vector<ScoreRow> rows;
  using Key = std::tuple<PuzzleId, Difficulty, std::uint64_t>;
  std::map<Key, std::vector<std::size_t>> solo_groups;
  for (const auto& rec : records) {
    for (int seat = 0; seat < rec.seats(); ++seat) {
      const auto s = static_cast<std::size_t>(seat);
      ScoreRow row;
      row.participant = rec.participants[s];
      row.puzzle = rec.tmpl.puzzle;
      row.difficulty = rec.tmpl.difficulty;
      row.seed = rec.tmpl.seed;
      row.seat = seat;
      if (s < rec.raw_scores.size()) row.raw = rec.raw_scores[s];
      if (s < rec.statuses.size()) row.status = rec.statuses[s];
      if (is_two_player(rec.tmpl.puzzle)) {
        row.normalized = row.raw.value_or(0.0);
      } else {
        solo_groups[{row.puzzle, row.difficulty, row.seed}].push_back(rows.size());
      }
      rows.push_back(std::move(row));
    }
  }
  for (const auto& [key, members] : solo_groups) {
    std::vector<std::optional<double>> raws;
    for (std::size_t i : members) raws.push_back(rows[i].raw);
    const auto norm = normalize(raws, traits(std::get<0>(key)).direction);
    for (std::size_t k = 0; k < members.size(); ++k) rows[members[k]].normalized = norm[k];
  }
  return rows;
}

std::vector<MatchResult> matches_from_records(const std::vector<MatchRecord>& records) {
  std::vector<MatchResult> out;
  using Key = std::tuple<PuzzleId, Difficulty, std::uint64_t>;
  std::map<Key, std::map<std::string, double>> solo;
  const std::vector<ScoreRow> rows = score_rows(records);
  for (const auto& row : rows) {
    if (!is_two_player(row.puzzle)) solo[{row.puzzle, row.difficulty, row.seed}][row.participant] = row.normalized;
  }
  for (const auto& rec : records) {
    if (rec.seats() == 2 && rec.raw_scores.size() == 2 && rec.raw_scores[0]) {
      out.push_back({rec.participants[0], rec.participants[1], *rec.raw_scores[0]});
    }
  }
  std::vector<std::map<std::string, double>> per_seed;
  for (auto& [key, scores] : solo) per_seed.push_back(std::move(scores));
  const auto solo_matches = solo_to_matches(per_seed);
  out.insert(out.end(), solo_matches.begin(), solo_matches.end());
  return out;
}

std::map<std::string, double> mean_scores(const std::vector<ScoreRow>& rows) {
  std::map<std::string, std::pair<double, int>> acc;
  for (const auto& row : rows) {
    acc[row.participant].first += row.normalized;
    ++acc[row.participant].second;
  }
  std::map<std::string, double> out;
  for (const auto& [name, a] : acc) out[name] = a.first / a.second;
  return out;
}

std::string score_rows_csv(const std::vector<ScoreRow>& rows) {
  std::ostringstream os;
  os << "participant,puzzle,difficulty,seed,seat,raw,normalized,status\n";
  for (const auto& r : rows) {
    os << r.participant << ',' << to_string(r.puzzle) << ',' << to_string(r.difficulty) << ','
       << r.seed << ',' << r.seat << ',' << (r.raw ? fixed(*r.raw) : "") << ','
       << fixed(r.normalized) << ',' << to_string(r.status) << '\n';
  }
  return os.str();
}

std::string summary_csv(const std::map<std::string, double>& means,
                        const std::map<std::string, Rating>& elo) {
  std::ostringstream os;
  os << "participant,mean_normalized,elo,elo_lo,elo_hi\n";
  for (const auto& [name, mean] : means) {
    os << name << ',' << fixed(mean);
    if (auto it = elo.find(name); it != elo.end()) {
      os << ',' << fixed(it->second.rating, 2) << ',' << fixed(it->second.lo, 2) << ','
         << fixed(it->second.hi, 2);
    } else {
      os << ",,,";
    }
    os << '\n';
  }
  return os.str();
}

std::string win_matrix_csv(const WinMatrix& matrix) {
  std::ostringstream os;
  os << "participant";
  for (const auto& p : matrix.participants) os << ',' << p;
  os << '\n';
  for (std::size_t i = 0; i < matrix.participants.size(); ++i) {
    os << matrix.participants[i];
    for (std::size_t j = 0; j < matrix.participants.size(); ++j) {
      os << ',';
      if (auto r = matrix.rate(i, j)) os << fixed(*r, 4);
    }
    os << '\n';
  }
  return os.str();
}

std::string status_csv(const std::map<std::string, StatusFractions>& dist) {
  std::ostringstream os;
  os << "participant";
  for (auto s : kAllStatuses) os << ',' << to_string(s);
  os << '\n';
  for (const auto& [name, f] : dist) {
    os << name;
    for (double v : f) os << ',' << fixed(v, 4);
    os << '\n';
  }
  return os.str();
}

std::string summary_pretty(const std::map<std::string, double>& means,
                           const std::map<std::string, Rating>& elo) {
  std::size_t width = 11;
  for (const auto& [name, m] : means) width = std::max(width, name.size());
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %8s  %8s  %19s\n", static_cast<int>(width), "participant",
                "score", "elo", "95% interval");
  os << line;
  for (const auto& [name, mean] : means) {
    std::string interval = "-";
    std::string rating = "-";
    if (auto it = elo.find(name); it != elo.end()) {
      rating = fixed(it->second.rating, 1);
      interval = "[" + fixed(it->second.lo, 1) + ", " + fixed(it->second.hi, 1) + "]";
    }
    std::snprintf(line, sizeof line, "%-*s  %8.4f  %8s  %19s\n", static_cast<int>(width),
                  name.c_str(), mean, rating.c_str(), interval.c_str());
    os << line;
  }
  return os.str();
}

}  // namespace ppx::scoring
