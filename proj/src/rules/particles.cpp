#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using particles::ParticleSpace;
using particles::Place;

class ParticlesRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::ExclusivityParticles; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"d", "k"});
    const auto d = tmpl.param("d");
    if (d > 12) fail(ErrorCode::InvalidTemplate, "ExclusivityParticles supports d <= 12");
    return ParticleSpace{static_cast<int>(d), static_cast<int>(tmpl.param("k")), {}};
  }

  MoveList legal_moves(const GameState& state) const override {
    const ParticleSpace& space = state.as<ParticleSpace>();
    MoveList list;
    for (auto v : particles::legal_placements(space)) list.moves.emplace_back(Place{hypercube::to_coords(v, space.d)});
    return list;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    ParticleSpace& space = state.as<ParticleSpace>();
    hypercube::Vertex v = 0;
    try {
      v = hypercube::from_coords(std::get<Place>(move).coords, space.d);
    } catch (const Error& e) {
      return illegal(e.what());
    }
    if (!particles::placement_legal(space, v)) return illegal("position is within distance k of a placed particle");
    space.placed.push_back(v);
    return legal();
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const ParticleSpace& space = state.as<ParticleSpace>();
    std::string out = header(state, viewer);
    out += "d " + std::to_string(space.d) + '\n';
    out += "k " + std::to_string(space.k) + '\n';
    out += "placed";
    for (auto v : space.placed) out += ' ' + hypercube::format(v, space.d);
    return out + '\n';
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const ParticleSpace& space = state.as<ParticleSpace>();
    return {{"d", space.d}, {"k", space.k}, {"placed", space.placed}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(place\s+(\[.*\]))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto coords = parse_int_list((*m)[1]);
    if (!coords) return std::nullopt;
    return Place{*coords};
  }

  std::string format_move(const Move& move) const override {
    return "place " + int_list(std::get<Place>(move).coords);
  }

  std::string move_grammar() const override { return "place [b1, b2, ..., bd]   (each bi is 0 or 1)"; }
};

}  // namespace

const PuzzleRules& particles_rules() {
  static const ParticlesRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
