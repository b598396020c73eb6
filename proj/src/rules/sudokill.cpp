#include <algorithm>

#include "common.hpp"
#include "registry.hpp"

namespace ppx::rules_detail {
namespace {

using sudokill::Board;
using sudokill::Placement;

class SudokillRules final : public PuzzleRules {
 public:
  PuzzleId puzzle() const override { return PuzzleId::SudoKill; }

  Payload generate(const PuzzleTemplate& tmpl) const override {
    require_positive_params(tmpl, {"side", "empty_cells"});
    auto rng = tmpl.rng("board");
    return sudokill::generate(static_cast<int>(tmpl.param("side")),
                              static_cast<int>(tmpl.param("empty_cells")), rng);
  }

  MoveList legal_moves(const GameState& state) const override {
    MoveList list;
    for (const Placement& p : sudokill::legal_placements(state.as<Board>())) list.moves.emplace_back(p);
    return list;
  }

  bool has_legal_move(const GameState& state) const override {
    const Board& board = state.as<Board>();
    for (const auto& cell : sudokill::allowed_cells(board)) {
      for (int v = 1; v <= board.n; ++v) {
        if (sudokill::is_valid(board, cell.row, cell.col, v)) return true;
      }
    }
    return false;
  }

  Feedback apply(GameState& state, const Move& move) const override {
    Board& board = state.as<Board>();
    const auto& p = std::get<Placement>(move);
    if (!board.in_range(p.row, p.col)) return illegal("cell outside the grid");
    if (board.at(p.row, p.col) != 0) return illegal("cell is occupied");
    const auto allowed = sudokill::allowed_cells(board);
    if (std::find(allowed.begin(), allowed.end(), sudokill::Cell{p.row, p.col}) == allowed.end()) {
      return illegal("cell not in the row or column of the last move");
    }
    if (!sudokill::is_valid(board, p.row, p.col, p.value)) {
      return illegal("value repeats in the row, column or subgrid");
    }
    board.grid[static_cast<std::size_t>(p.row * board.n + p.col)] = p.value;
    board.last_move = p;
    return legal();
  }

  std::string observe(const GameState& state, Player viewer) const override {
    const Board& board = state.as<Board>();
    std::string out = header(state, viewer);
    out += "size " + std::to_string(board.n) + '\n';
    out += "grid\n" + grid_rows(board.grid, board.n);
    if (board.last_move) {
      out += "last_move " + format_move(*board.last_move) + '\n';
    } else {
      out += "last_move none\n";
    }
    return out;
  }

  nlohmann::json snapshot(const GameState& state) const override {
    const Board& board = state.as<Board>();
    nlohmann::json j;
    j["n"] = board.n;
    j["grid"] = board.grid;
    j["last_move"] = board.last_move ? nlohmann::json{board.last_move->row, board.last_move->col,
                                                      board.last_move->value}
                                     : nlohmann::json(nullptr);
    return j;
  }

  std::optional<Move> parse_move(std::string_view text) const override {
    static const std::regex re(R"((\d+)\s+(\d+)\s+(\d+))");
    auto m = match(trim(text), re);
    if (!m) return std::nullopt;
    auto r = to_int((*m)[1]), c = to_int((*m)[2]), v = to_int((*m)[3]);
    if (!r || !c || !v || *r > 1000 || *c > 1000 || *v > 1000) return std::nullopt;
    return Placement{static_cast<int>(*r), static_cast<int>(*c), static_cast<int>(*v)};
  }

  std::string format_move(const Move& move) const override {
    const auto& p = std::get<Placement>(move);
    return std::to_string(p.row) + " " + std::to_string(p.col) + " " + std::to_string(p.value);
  }

  std::string move_grammar() const override { return "<row> <col> <value>   (0-indexed row and column)"; }
};

}  // namespace

const PuzzleRules& sudokill_rules() {
  static const SudokillRules rules;
  return rules;
}

}  // namespace ppx::rules_detail
