#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using ruby::Request;
using ruby::RubyWorld;

class RubyRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::RubyRisks; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"num_boxes", "total_rubies"});
    auto rng = tmpl.rng("boxes");
    return ruby::generate(static_cast<int>(tmpl.param("num_boxes")),
                          static_cast<int>(tmpl.param("total_rubies")), rng);
  }

  // Requests above what is left in total can never pay out and are
  // rejected, which keeps the move space finite.
  MoveList legal_moves(const GameState& state) const override {
    const RubyWorld& world = state.as<RubyWorld>();
    MoveList list;
    for (int r = 0; r <= world.total - world.collected; ++r) list.moves.emplace_back(Request{r});
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    RubyWorld& world = state.as<RubyWorld>();
    const auto amount = std::get<Request>(move).amount;
    if (amount < 0 || amount > world.total - world.collected) {
      return illegal("request must lie in 0.." + std::to_string(world.total - world.collected));
    }
    int gain = 0;
    try {
      gain = ruby::resolve(world, static_cast<int>(amount));
    } catch (const Error& e) {
      return illegal(e.what());
    }
    Feedback fb = legal({{"gain", gain}, {"collected", world.collected}});
    if (world.boxes_left() == 0) return finish(fb, Outcome::solo(world.collected));
    return fb;
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const RubyWorld& world = state.as<RubyWorld>();
    std::string out = header(state, viewer);
    out += "num_boxes " + std::to_string(world.num_boxes) + '\n';
    out += "total_rubies " + std::to_string(world.total) + '\n';
    out += "next_box " + std::to_string(world.next_box + 1) + '\n';
    out += "collected " + std::to_string(world.collected) + '\n';
    out += "history";
    for (const auto& o : world.history) out += ' ' + std::to_string(o.request) + "->" + std::to_string(o.gain);
    return out + '\n';
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const RubyWorld& world = state.as<RubyWorld>();
    nlohmann::json history = nlohmann::json::array();
    for (const auto& o : world.history) history.push_back({o.request, o.gain});
    return {{"contents", world.contents}, {"next_box", world.next_box},
            {"collected", world.collected}, {"forfeited", world.forfeited},
            {"history", history}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(request\s+(\d+))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto v = to_int((*m)[1]);
    if (!v) return std::nullopt;
    return Request{*v};
  }

  std::string format_move(const Move& move) const override {
    return "request " + std::to_string(std::get<Request>(move).amount);
  }

  std::string move_grammar() const override { return "request <number of rubies>"; }
};

}  // namespace

const PuzzleRules& ruby_rules() {
  static const RubyRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
