#include "registry.hpp"

#include "ppx/core/types.hpp"

namespace ppx {

Player PuzzleRules::next_player(const GameState& state) const {
  return is_two_player(state.puzzle()) ? opponent(state.active_player) : Player::Solo;
}

const PuzzleRules& rules_for(PuzzleId puzzle) {
  using namespace rules_detail;
  switch (puzzle) {
    case PuzzleId::SudoKill: return sudokill_rules();
    case PuzzleId::TidyTower: return tidytower_rules();
    case PuzzleId::CardNim: return cardnim_rules();
    case PuzzleId::OptimalTouring: return touring_rules();
    case PuzzleId::CountMaximalCocktails: return count_cocktails_rules();
    case PuzzleId::MaxMaximalCocktails: return max_cocktails_rules();
    case PuzzleId::ExclusivityParticles: return particles_rules();
    case PuzzleId::ExclusivityProbes: return probes_rules();
    case PuzzleId::RubyRisks: return ruby_rules();
    case PuzzleId::BeatOrBombSto: return beatorbomb_rules();
    case PuzzleId::MaxTarget: return max_target_rules();
    case PuzzleId::LargerTarget: return larger_target_rules();
    case PuzzleId::Superply: return superply_rules();
  }
  return sudokill_rules();
}

}  // namespace ppx
