#include <cstdio>

#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using touring::TourState;
using touring::TourStep;

std::string clock_text(int minutes) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d:%02d", minutes / 60, minutes % 60);
  return buf;
}

std::string number_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

class TouringRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::OptimalTouring; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"num_sites"});
    auto rng = tmpl.rng("sites");
    return touring::start_tour(touring::generate(static_cast<int>(tmpl.param("num_sites")), rng));
  }

  MoveList legal_moves(const GameState& state) const override {
    const TourState& tour = state.as<TourState>();
    MoveList list;
    for (int s = 0; s < static_cast<int>(tour.sites.size()); ++s) {
      if (!tour.visited(s)) list.moves.emplace_back(TourStep{s});
    }
    list.moves.emplace_back(TourStep{std::nullopt});
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    TourState& tour = state.as<TourState>();
    const auto& step = std::get<TourStep>(move);
    if (!step.site) {
      tour.finished = true;
      return finish(legal(), Outcome::solo(tour.collected));
    }
    touring::Visit v;
    try {
      v = touring::visit(tour, *step.site);
    } catch (const Error& e) {
      return illegal(e.what());
    }
    Feedback fb = legal({{"site", v.site + 1},
                         {"arrival", clock_text(v.arrival)},
                         {"start", clock_text(v.start)},
                         {"counted", v.counted},
                         {"clock", clock_text(tour.clock)}});
    if (tour.itinerary.size() == tour.sites.size()) {
      tour.finished = true;
      return finish(fb, Outcome::solo(tour.collected));
    }
    return fb;
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const TourState& tour = state.as<TourState>();
    std::string out = header(state, viewer);
    out += "sites " + std::to_string(tour.sites.size()) + '\n';
    out += "site avenue street desired_minutes value begin_hour end_hour\n";
    for (std::size_t i = 0; i < tour.sites.size(); ++i) {
      const auto& s = tour.sites[i];
      out += std::to_string(i + 1) + ' ' + std::to_string(s.avenue) + ' ' + std::to_string(s.street) + ' ' +
             std::to_string(s.desired_minutes) + ' ' + number_text(s.value) + ' ' +
             std::to_string(s.begin_hour) + ' ' + std::to_string(s.end_hour) + '\n';
    }
    out += "clock " + clock_text(tour.clock) + '\n';
    out += "position " + (tour.position ? std::to_string(*tour.position + 1) : std::string("none")) + '\n';
    out += "collected " + number_text(tour.collected) + '\n';
    out += "itinerary";
    for (const auto& v : tour.itinerary) {
      out += ' ' + std::to_string(v.site + 1) + '@' + clock_text(v.start) + (v.counted ? "" : "(missed)");
    }
    return out + '\n';
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const TourState& tour = state.as<TourState>();
    nlohmann::json sites = nlohmann::json::array();
    for (const auto& s : tour.sites) {
      sites.push_back({s.avenue, s.street, s.desired_minutes, s.value, s.begin_hour, s.end_hour});
    }
    nlohmann::json visits = nlohmann::json::array();
    for (const auto& v : tour.itinerary) visits.push_back({v.site, v.arrival, v.start, v.counted});
    return {{"sites", sites},
            {"itinerary", visits},
            {"clock", tour.clock},
            {"position", tour.position ? nlohmann::json(*tour.position) : nlohmann::json(nullptr)},
            {"collected", tour.collected},
            {"finished", tour.finished}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    const std::string t = trim(text);
    if (t == "finish") return TourStep{std::nullopt};
    static const std::regex re(R"(visit\s+(\d+))");
    auto m = match(t, re);
    if (!m) return std::nullopt;
    auto s = to_int((*m)[1]);
    if (!s || *s < 1 || *s > 100000) return std::nullopt;
    return TourStep{static_cast<int>(*s) - 1};
  }

  std::string format_move(const Move& move) const override {
    const auto& step = std::get<TourStep>(move);
    return step.site ? "visit " + std::to_string(*step.site + 1) : std::string("finish");
  }

  std::string move_grammar() const override { return "visit <site number> | finish"; }
};

}  // namespace

const PuzzleRules& touring_rules() {
  static const TouringRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
