#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using superply::Claim;
using superply::SuperplyBoard;

class SuperplyRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::Superply; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"side"});
    const auto n = tmpl.param("side");
    if (n > 30) fail(ErrorCode::InvalidTemplate, "Superply side must be at most 30");
    return superply::start(static_cast<int>(n), tmpl.rng("hints"));
  }

  MoveList legal_moves(const GameState& state) const override {
    MoveList list;
    for (const auto& c : superply::hint_cells(state.as<SuperplyBoard>())) list.moves.emplace_back(Claim{c.row, c.col});
    return list;
  }

  bool illegal_move_passes() const override { return true; }

  Feedback apply(GameState& state, const Move& move) const override {
    SuperplyBoard& board = state.as<SuperplyBoard>();
    const Claim claim = std::get<Claim>(move);
    const int value = state.active_player == Player::P1 ? 1 : 2;
    const bool valid = board.in_range(claim.row, claim.col) && board.at(claim.row, claim.col) == 0 &&
                       board.hint.matches(claim.row, claim.col);
    if (!valid) {
      Feedback fb = illegal(!board.in_range(claim.row, claim.col) ? "cell outside the board"
                            : board.at(claim.row, claim.col) != 0 ? "cell is occupied"
                                                                  : "cell does not satisfy the hint");
      ++board.consecutive_passes;
      board.hint = superply::draw_hint(board, board.rng);
      // Two full rounds of passes per cell with no progress end the match.
      if (board.consecutive_passes >= 2 * board.n * board.n) return finish(fb, Outcome::tie());
      return fb;
    }
    board.at(claim.row, claim.col) = value;
    board.consecutive_passes = 0;
    if (superply::has_path(board, value)) return finish(legal(), Outcome::win(state.active_player));
    if (board.full()) return finish(legal(), Outcome::tie());
    board.hint = superply::draw_hint(board, board.rng);
    return legal({{"hint", board.hint.text()}});
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const SuperplyBoard& board = state.as<SuperplyBoard>();
    std::string out = header(state, viewer);
    out += "size " + std::to_string(board.n) + '\n';
    out += "goal P1 left-right, P2 top-bottom\n";
    out += "grid\n" + grid_rows(board.grid, board.n);
    out += "hint " + board.hint.text() + '\n';
    return out;
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const SuperplyBoard& board = state.as<SuperplyBoard>();
    return {{"n", board.n}, {"grid", board.grid}, {"hint", board.hint.text()},
            {"passes", board.consecutive_passes},
            {"rng", {board.rng.key(), board.rng.counter()}}};
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"(claim\s+(\d+)\s+(\d+))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto r = to_int((*m)[1]), c = to_int((*m)[2]);
    if (!r || !c || *r > 1000 || *c > 1000) return std::nullopt;
    return Claim{static_cast<int>(*r), static_cast<int>(*c)};
  }

  std::string format_move(const Move& move) const override {
    const auto& c = std::get<Claim>(move);
    return "claim " + std::to_string(c.row) + " " + std::to_string(c.col);
  }

  std::string move_grammar() const override { return "claim <row> <col>   (1-indexed)"; }
};

}  // namespace

const PuzzleRules& superply_rules() {
  static const SuperplyRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
