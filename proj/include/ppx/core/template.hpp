#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ppx/core/rng.hpp"
#include "ppx/core/types.hpp"

namespace ppx {

// Puzzle identity plus the integer size parameters and seed that together
// denote exactly one instance.
struct PuzzleTemplate {
  PuzzleId puzzle = PuzzleId::SudoKill;
  Difficulty difficulty = Difficulty::Easy;
  std::map<std::string, std::int64_t> size_params;
  std::uint64_t seed = 1;
  // Optional rule switches (e.g. "strict-increase" for MaxMaximalCocktails).
  std::set<std::string> rule_flags;

  std::int64_t param(std::string_view name) const;
  bool has_flag(std::string_view flag) const;

  // Generator stream for this instance, keyed by (puzzle, difficulty, seed).
  CounterRng rng(std::string_view stream) const;

  bool operator==(const PuzzleTemplate&) const = default;
};

// Size parameters used by the standard Easy and Normal templates.
std::map<std::string, std::int64_t> standard_params(PuzzleId puzzle, Difficulty difficulty);

PuzzleTemplate standard_template(PuzzleId puzzle, Difficulty difficulty, std::uint64_t seed);

// Throws InvalidTemplate when a parameter is missing or not strictly positive.
void require_positive_params(const PuzzleTemplate& tmpl,
                             std::initializer_list<std::string_view> names);

nlohmann::json to_json(const PuzzleTemplate& tmpl);
PuzzleTemplate template_from_json(const nlohmann::json& j);

}  // namespace ppx
