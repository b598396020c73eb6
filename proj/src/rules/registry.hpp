#pragma once

#include "ppx/core/rules.hpp"

namespace ppx::rules_detail {

const PuzzleRules& sudokill_rules();
const PuzzleRules& tidytower_rules();
const PuzzleRules& cardnim_rules();
const PuzzleRules& touring_rules();
const PuzzleRules& count_cocktails_rules();
const PuzzleRules& max_cocktails_rules();
const PuzzleRules& particles_rules();
const PuzzleRules& probes_rules();
const PuzzleRules& ruby_rules();
const PuzzleRules& beatorbomb_rules();
const PuzzleRules& max_target_rules();
const PuzzleRules& larger_target_rules();
const PuzzleRules& superply_rules();

}  // namespace ppx::rules_detail
