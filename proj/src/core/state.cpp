#include "ppx/core/state.hpp"

#include "ppx/core/errors.hpp"

namespace ppx {

bool move_matches(PuzzleId puzzle, const Move& move) {
  std::size_t expected = 0;
  switch (puzzle) {
    case PuzzleId::SudoKill: expected = 0; break;
    case PuzzleId::TidyTower: expected = 1; break;
    case PuzzleId::CardNim: expected = 2; break;
    case PuzzleId::OptimalTouring: expected = 3; break;
    case PuzzleId::CountMaximalCocktails: expected = 4; break;
    case PuzzleId::MaxMaximalCocktails: expected = 5; break;
    case PuzzleId::ExclusivityParticles: expected = 6; break;
    case PuzzleId::ExclusivityProbes: expected = 7; break;
    case PuzzleId::RubyRisks: expected = 8; break;
    case PuzzleId::BeatOrBombSto: expected = 9; break;
    case PuzzleId::MaxTarget:
    case PuzzleId::LargerTarget: expected = 10; break;
    case PuzzleId::Superply: expected = 11; break;
  }
  return move.index() == expected;
}

nlohmann::json to_json(const Outcome& outcome) {
  switch (outcome.kind) {
    case Outcome::Kind::Winner:
      return {{"kind", "winner"}, {"winner", std::string(to_string(outcome.winner))}};
    case Outcome::Kind::Tie:
      return {{"kind", "tie"}};
    case Outcome::Kind::SoloScore:
      return {{"kind", "solo"}, {"value", outcome.value}};
    case Outcome::Kind::SoloFailed:
      return {{"kind", "solo_failed"}};
  }
  return nullptr;
}

Outcome outcome_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "winner") {
    auto p = parse_player(j.at("winner").get<std::string>());
    if (!p) fail(ErrorCode::CorruptReplay, "unknown winner");
    return Outcome::win(*p);
  }
  if (kind == "tie") return Outcome::tie();
  if (kind == "solo") return Outcome::solo(j.at("value").get<double>());
  if (kind == "solo_failed") return Outcome::solo_failed();
  fail(ErrorCode::CorruptReplay, "unknown outcome kind '" + kind + "'");
}

namespace {

std::string_view legality_name(Feedback::Legality l) {
  switch (l) {
    case Feedback::Legality::Legal: return "Legal";
    case Feedback::Legality::Illegal: return "Illegal";
    case Feedback::Legality::Malformed: return "Malformed";
  }
  return "?";
}

}  // namespace

nlohmann::json to_json(const Feedback& feedback) {
  nlohmann::json j;
  j["legality"] = std::string(legality_name(feedback.legality));
  j["reason"] = feedback.reason;
  j["terminated"] = feedback.terminated;
  j["outcome"] = feedback.outcome ? to_json(*feedback.outcome) : nlohmann::json(nullptr);
  j["revealed"] = feedback.revealed;
  return j;
}

Feedback feedback_from_json(const nlohmann::json& j) {
  Feedback fb;
  const std::string legality = j.at("legality").get<std::string>();
  if (legality == "Legal") {
    fb.legality = Feedback::Legality::Legal;
  } else if (legality == "Illegal") {
    fb.legality = Feedback::Legality::Illegal;
  } else if (legality == "Malformed") {
    fb.legality = Feedback::Legality::Malformed;
  } else {
    fail(ErrorCode::CorruptReplay, "unknown legality '" + legality + "'");
  }
  fb.reason = j.at("reason").get<std::string>();
  fb.terminated = j.at("terminated").get<bool>();
  if (!j.at("outcome").is_null()) fb.outcome = outcome_from_json(j.at("outcome"));
  fb.revealed = j.at("revealed");
  return fb;
}

}  // namespace ppx
