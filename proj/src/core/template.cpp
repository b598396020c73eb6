#include "ppx/core/template.hpp"

#include "ppx/core/errors.hpp"

namespace ppx {

std::int64_t PuzzleTemplate::param(std::string_view name) const {
  auto it = size_params.find(std::string(name));
  if (it == size_params.end()) {
    fail(ErrorCode::InvalidTemplate,
         std::string(to_string(puzzle)) + ": missing size parameter '" + std::string(name) + "'");
  }
  return it->second;
}

bool PuzzleTemplate::has_flag(std::string_view flag) const {
  return rule_flags.count(std::string(flag)) > 0;
}

CounterRng PuzzleTemplate::rng(std::string_view stream) const {
  return CounterRng::keyed({static_cast<std::uint64_t>(puzzle),
                            static_cast<std::uint64_t>(difficulty), seed})
      .derive(stream);
}

std::map<std::string, std::int64_t> standard_params(PuzzleId puzzle, Difficulty difficulty) {
  const bool easy = difficulty == Difficulty::Easy;
  auto pick = [easy](std::int64_t e, std::int64_t n) { return easy ? e : n; };
  switch (puzzle) {
    case PuzzleId::SudoKill:
      return {{"side", pick(4, 9)}, {"empty_cells", pick(8, 36)}};
    case PuzzleId::TidyTower:
      return {{"length", pick(6, 10)}};
    case PuzzleId::CardNim:
      return {{"num_cards", pick(3, 5)}, {"max_card", pick(3, 8)}, {"max_stones", pick(10, 20)}};
    case PuzzleId::OptimalTouring:
      return {{"num_sites", pick(5, 8)}};
    case PuzzleId::CountMaximalCocktails:
      return {{"num_nodes", pick(6, 8)}, {"edge_percent", 30}};
    case PuzzleId::MaxMaximalCocktails:
      return {{"num_nodes", pick(4, 6)}};
    case PuzzleId::ExclusivityParticles:
      return {{"d", pick(3, 4)}, {"k", 2}};
    case PuzzleId::ExclusivityProbes:
      return {{"d", pick(3, 4)}, {"k", pick(1, 2)}, {"num_particles", pick(2, 3)}};
    case PuzzleId::RubyRisks:
      return {{"num_boxes", pick(3, 5)}, {"total_rubies", pick(12, 25)}};
    case PuzzleId::BeatOrBombSto:
      return {{"num_cards", pick(5, 8)}};
    case PuzzleId::MaxTarget:
      return {{"bag_count", pick(2, 3)}, {"coins_per_bag", pick(2, 3)}, {"max_guess", pick(2, 4)}};
    case PuzzleId::LargerTarget:
      return {{"bag_count", pick(2, 3)}, {"coins_per_bag", pick(2, 3)}, {"max_guess", pick(2, 3)}};
    case PuzzleId::Superply:
      return {{"side", pick(4, 6)}};
  }
  return {};
}

PuzzleTemplate standard_template(PuzzleId puzzle, Difficulty difficulty, std::uint64_t seed) {
  PuzzleTemplate t;
  t.puzzle = puzzle;
  t.difficulty = difficulty;
  t.size_params = standard_params(puzzle, difficulty);
  t.seed = seed;
  return t;
}

void require_positive_params(const PuzzleTemplate& tmpl,
                             std::initializer_list<std::string_view> names) {
  for (std::string_view name : names) {
    if (tmpl.param(name) <= 0) {
      fail(ErrorCode::InvalidTemplate, std::string(to_string(tmpl.puzzle)) + ": parameter '" +
                                           std::string(name) + "' must be positive");
    }
  }
}

nlohmann::json to_json(const PuzzleTemplate& tmpl) {
  nlohmann::json j;
  j["puzzle"] = std::string(to_string(tmpl.puzzle));
  j["difficulty"] = std::string(to_string(tmpl.difficulty));
  j["size_params"] = tmpl.size_params;
  j["seed"] = tmpl.seed;
  j["rule_flags"] = tmpl.rule_flags;
  return j;
}

PuzzleTemplate template_from_json(const nlohmann::json& j) {
  PuzzleTemplate t;
  auto puzzle = parse_puzzle(j.at("puzzle").get<std::string>());
  auto difficulty = parse_difficulty(j.at("difficulty").get<std::string>());
  if (!puzzle || !difficulty) fail(ErrorCode::InvalidTemplate, "unknown puzzle or difficulty");
  t.puzzle = *puzzle;
  t.difficulty = *difficulty;
  t.size_params = j.at("size_params").get<std::map<std::string, std::int64_t>>();
  t.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("rule_flags")) t.rule_flags = j.at("rule_flags").get<std::set<std::string>>();
  return t;
}

}  // namespace ppx
