#pragma once

// Elementary moves on rectangular diagrams. Every move returns a new valid
// diagram or throws MoveRejected; nothing is modified in place.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdg/diagram.hpp"
#include "rdg/invariants.hpp"

namespace rdg {

class MoveRejected : public Error {
 public:
  using Error::Error;
};

/// Where the notch of a stabilization goes, relative to the corner: E/W is the
/// side of the inserted column, N/S the side of the inserted row.
enum class Quadrant { NE, NW, SE, SW };

enum class MoveKind { Flip, HCommute, VCommute, Stabilize, Destabilize, RotateTheta };

struct Move {
  MoveKind kind = MoveKind::Flip;
  int row = 0;  // Flip, HCommute, Stabilize, Destabilize
  int col = 0;  // VCommute, Stabilize, Destabilize
  Quadrant quadrant = Quadrant::NE;
  int k = 0;  // RotateTheta

  static Move flip(int row) { return {MoveKind::Flip, row, 0, Quadrant::NE, 0}; }
  static Move h_commute(int row) { return {MoveKind::HCommute, row, 0, Quadrant::NE, 0}; }
  static Move v_commute(int col) { return {MoveKind::VCommute, 0, col, Quadrant::NE, 0}; }
  static Move stabilize(int row, int col, Quadrant q) { return {MoveKind::Stabilize, row, col, q, 0}; }
  static Move destabilize(int row, int col) { return {MoveKind::Destabilize, row, col, Quadrant::NE, 0}; }
  static Move rotate(int k) { return {MoveKind::RotateTheta, 0, 0, Quadrant::NE, k}; }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Literal forms: flip:<row>, hc:<row>, vc:<col>, stab:<row>,<col>,<NE|NW|SE|SW>,
/// destab:<row>,<col>, rot:<k>.
std::string to_string(const Move& m);
Move parse_move(std::string_view text);

std::string to_string(Quadrant q);

/// Replaces the angular support of a row by its cyclic complement.
RectDiagram flip(const RectDiagram& d, int z_rank);
/// Exchanges the rows at z_rank and z_rank + 1.
RectDiagram h_commute(const RectDiagram& d, int z_rank);
/// Exchanges column col and its cyclic successor.
RectDiagram v_commute(const RectDiagram& d, int col);
/// `corner` must be an endpoint (row, col) of that row's horizontal arc.
RectDiagram stabilize(const RectDiagram& d, int row, int col, Quadrant q);
/// Witness = middle corner of a notch: both of its arcs span adjacent ranks.
RectDiagram destabilize(const RectDiagram& d, int row, int col);
RectDiagram rotate_theta(const RectDiagram& d, int k);

RectDiagram apply(const RectDiagram& d, const Move& m);
std::optional<RectDiagram> try_apply(const RectDiagram& d, const Move& m);

/// A move that undoes `m` when applied to apply(d, m). For a destabilization
/// at the cyclic seam the undo may differ from d by a theta rotation.
Move inverse(const RectDiagram& d, const Move& m);

/// Every syntactically possible move on d (stabilizations included); some may
/// be rejected by apply.
std::vector<Move> candidate_moves(const RectDiagram& d);

enum class MoveLabel { Legendrian, TransversePlus, Topological };
std::string to_string(MoveLabel l);

struct MoveClass {
  int delta_tb = 0;
  int delta_rot = 0;
  int delta_sl_plus = 0;
  MoveLabel label = MoveLabel::Topological;
};

MoveClass classify_delta(const InvariantReport& before, const InvariantReport& after);
MoveClass classify(const RectDiagram& d, const Move& m);

}  // namespace rdg
