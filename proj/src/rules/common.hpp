#pragma once

#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ppx/core/errors.hpp"
#include "ppx/core/rules.hpp"

namespace ppx::rules_detail {

inline Feedback legal(nlohmann::json revealed = nullptr) {
  Feedback fb;
  fb.revealed = std::move(revealed);
  return fb;
}

inline Feedback illegal(std::string reason) {
  Feedback fb;
  fb.legality = Feedback::Legality::Illegal;
  fb.reason = std::move(reason);
  return fb;
}

inline Feedback malformed(std::string reason) {
  Feedback fb;
  fb.legality = Feedback::Legality::Malformed;
  fb.reason = std::move(reason);
  return fb;
}

inline Feedback finish(Feedback fb, Outcome outcome) {
  fb.terminated = true;
  fb.outcome = outcome;
  return fb;
}

inline Outcome compare_totals(int p1, int p2) {
  if (p1 > p2) return Outcome::win(Player::P1);
  if (p2 > p1) return Outcome::win(Player::P2);
  return Outcome::tie();
}

// Common observation preamble.
inline std::string header(const GameState& state, Player viewer) {
  std::ostringstream out;
  out << "puzzle " << to_string(state.puzzle()) << '\n'
      << "difficulty " << to_string(state.tmpl.difficulty) << '\n'
      << "you " << to_string(viewer) << '\n'
      << "turn " << state.turn_index << '\n'
      << "to_move " << to_string(state.active_player) << '\n';
  return out.str();
}

inline std::string int_list(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

inline std::string grid_rows(const std::vector<int>& grid, int n) {
  std::string out;
  for (int r = 0; r < n; ++r) {
    std::vector<int> row(grid.begin() + r * n, grid.begin() + (r + 1) * n);
    out += int_list(row) + '\n';
  }
  return out;
}

// Owned copy of one capture group; the subject string may be a temporary.
struct Group {
  std::string text;
  bool matched = false;

  operator const std::string&() const { return text; }
  const std::string& str() const { return text; }
};

// Full match of `text` against `pattern`.
inline std::optional<std::vector<Group>> match(const std::string& text, const std::regex& pattern) {
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return std::nullopt;
  std::vector<Group> groups;
  for (const auto& g : m) groups.push_back({g.str(), g.matched});
  return groups;
}

inline std::string trim(std::string_view text) {
  const auto b = text.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(b, e - b + 1));
}

// Parses "[0, 1, 1]" style integer lists.
inline std::optional<std::vector<int>> parse_int_list(const std::string& text) {
  static const std::regex list_re(R"(\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\])");
  if (!std::regex_match(text, list_re)) return std::nullopt;
  std::vector<int> values;
  static const std::regex num_re(R"(-?\d+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), num_re); it != std::sregex_iterator(); ++it) {
    try {
      values.push_back(std::stoi(it->str()));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return values;
}

inline std::optional<long long> to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ppx::rules_detail
