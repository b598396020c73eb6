#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using probes::Probe;
using probes::ProbeWorld;

// Probes beyond this multiple of the cube size end the run as failed, so an
// agent that never locates everything cannot stall a match.
constexpr int kProbeCapFactor = 16;

class ProbesRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::ExclusivityProbes; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"d", "k", "num_particles"});
    const auto d = tmpl.param("d");
    if (d > 12) fail(ErrorCode::InvalidTemplate, "ExclusivityProbes supports d <= 12");
    auto rng = tmpl.rng("hidden");
    return probes::generate(static_cast<int>(d), static_cast<int>(tmpl.param("k")),
                            static_cast<int>(tmpl.param("num_particles")), rng);
  }

  MoveList legal_moves(const GameState& state) const override {
    const ProbeWorld& world = state.as<ProbeWorld>();
    MoveList list;
    for (hypercube::Vertex v = 0; v < (hypercube::Vertex{1} << world.d); ++v) {
      list.moves.emplace_back(Probe{hypercube::to_coords(v, world.d)});
    }
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    ProbeWorld& world = state.as<ProbeWorld>();
    bool yes = false;
    try {
      yes = probes::answer(world, std::get<Probe>(move).coords);
    } catch (const Error& e) {
      return illegal(e.what());
    }
    Feedback fb = legal({{"answer", yes ? "yes" : "no"}});
    if (world.all_found()) return finish(fb, Outcome::solo(probes::score(world)));
    if (world.probes_used >= kProbeCapFactor * (1 << world.d)) return finish(fb, Outcome::solo_failed());
    return fb;
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const ProbeWorld& world = state.as<ProbeWorld>();
    std::string out = header(state, viewer);
    out += "d " + std::to_string(world.d) + '\n';
    out += "k " + std::to_string(world.k) + '\n';
    out += "num_particles " + std::to_string(world.num_particles) + '\n';
    out += "probes_used " + std::to_string(world.probes_used) + '\n';
    out += "found";
    for (auto v : world.found) out += ' ' + hypercube::format(v, world.d);
    out += "\nhistory";
    for (const auto& r : world.history) out += ' ' + hypercube::format(r.position, world.d) + (r.yes ? ":yes" : ":no");
    return out + '\n';
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const ProbeWorld& world = state.as<ProbeWorld>();
    nlohmann::json history = nlohmann::json::array();
    for (const auto& r : world.history) history.push_back({r.position, r.yes});
    return {{"d", world.d}, {"k", world.k}, {"num_particles", world.num_particles},
            {"hidden", world.hidden}, {"probes_used", world.probes_used},
            {"found", world.found}, {"history", history}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(probe\s+(\[.*\]))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto coords = parse_int_list((*m)[1]);
    if (!coords) return std::nullopt;
    return Probe{*coords};
  }

  std::string format_move(const Move& move) const override {
    return "probe " + int_list(std::get<Probe>(move).coords);
  }

  std::string move_grammar() const override { return "probe [b1, b2, ..., bd]   (each bi is 0 or 1)"; }
};

}  // namespace

const PuzzleRules& probes_rules() {
  static const ProbesRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
