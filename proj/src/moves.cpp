#include "rdg/moves.hpp"

#include <charconv>
#include <utility>

namespace rdg {

namespace {

void require_row(const RectDiagram& d, int z) {
  if (z < 1 || z > d.size()) throw MoveRejected("row " + std::to_string(z) + " does not exist");
}

void require_col(const RectDiagram& d, int c) {
  if (c < 1 || c > d.size()) throw MoveRejected("column " + std::to_string(c) + " does not exist");
}

bool is_east(Quadrant q) { return q == Quadrant::NE || q == Quadrant::SE; }
bool is_north(Quadrant q) { return q == Quadrant::NE || q == Quadrant::NW; }

Quadrant make_quadrant(bool east, bool north) {
  if (north) return east ? Quadrant::NE : Quadrant::NW;
  return east ? Quadrant::SE : Quadrant::SW;
}

// Exactly one endpoint of [b_lo, b_hi] strictly inside (a_lo, a_hi).
bool interleaved(int a_lo, int a_hi, int b_lo, int b_hi) {
  const bool lo_in = a_lo < b_lo && b_lo < a_hi;
  const bool hi_in = a_lo < b_hi && b_hi < a_hi;
  return lo_in != hi_in;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw Error("bad move literal '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::NE: return "NE";
    case Quadrant::NW: return "NW";
    case Quadrant::SE: return "SE";
    case Quadrant::SW: return "SW";
  }
  return "?";
}

std::string to_string(const Move& m) {
  switch (m.kind) {
    case MoveKind::Flip: return "flip:" + std::to_string(m.row);
    case MoveKind::HCommute: return "hc:" + std::to_string(m.row);
    case MoveKind::VCommute: return "vc:" + std::to_string(m.col);
    case MoveKind::Stabilize:
      return "stab:" + std::to_string(m.row) + "," + std::to_string(m.col) + "," + to_string(m.quadrant);
    case MoveKind::Destabilize: return "destab:" + std::to_string(m.row) + "," + std::to_string(m.col);
    case MoveKind::RotateTheta: return "rot:" + std::to_string(m.k);
  }
  return "?";
}

Move parse_move(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("bad move literal '" + std::string(text) + "'");
  const auto head = text.substr(0, colon);
  std::vector<std::string_view> args;
  for (auto rest = text.substr(colon + 1);;) {
    const auto comma = rest.find(',');
    args.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  auto need = [&](std::size_t count) {
    if (args.size() != count) throw Error("bad move literal '" + std::string(text) + "'");
  };
  if (head == "flip") { need(1); return Move::flip(parse_int(args[0], text)); }
  if (head == "hc") { need(1); return Move::h_commute(parse_int(args[0], text)); }
  if (head == "vc") { need(1); return Move::v_commute(parse_int(args[0], text)); }
  if (head == "rot") { need(1); return Move::rotate(parse_int(args[0], text)); }
  if (head == "destab") { need(2); return Move::destabilize(parse_int(args[0], text), parse_int(args[1], text)); }
  if (head == "stab") {
    need(3);
    Quadrant q;
    if (args[2] == "NE") q = Quadrant::NE;
    else if (args[2] == "NW") q = Quadrant::NW;
    else if (args[2] == "SE") q = Quadrant::SE;
    else if (args[2] == "SW") q = Quadrant::SW;
    else throw Error("bad quadrant in move literal '" + std::string(text) + "'");
    return Move::stabilize(parse_int(args[0], text), parse_int(args[1], text), q);
  }
  throw Error("unknown move '" + std::string(head) + "'");
}

RectDiagram flip(const RectDiagram& d, int z_rank) {
  require_valid(d);
  require_row(d, z_rank);
  auto rows = d.rows();
  auto& h = rows[static_cast<std::size_t>(z_rank - 1)];
  h.sweep = opposite(h.sweep);
  return RectDiagram::from_rows(std::move(rows));
}

RectDiagram h_commute(const RectDiagram& d, int z_rank) {
  require_valid(d);
  if (z_rank < 1 || z_rank >= d.size()) throw MoveRejected("hc: no row pair at " + std::to_string(z_rank));
  const auto& a = d.row(z_rank);
  const auto& b = d.row(z_rank + 1);
  if (a.tail_col == b.head_col || a.head_col == b.tail_col) {
    throw MoveRejected("hc: rows " + std::to_string(z_rank) + " and " + std::to_string(z_rank + 1) +
                       " share a column");
  }
  const bool tail_in = column_inside(d, a.z_rank, b.tail_col);
  const bool head_in = column_inside(d, a.z_rank, b.head_col);
  if (tail_in != head_in) {
    throw MoveRejected("hc: angular supports of rows " + std::to_string(z_rank) + " and " +
                       std::to_string(z_rank + 1) + " interleave");
  }
  auto rows = d.rows();
  std::swap(rows[static_cast<std::size_t>(z_rank - 1)], rows[static_cast<std::size_t>(z_rank)]);
  rows[static_cast<std::size_t>(z_rank - 1)].z_rank = z_rank;
  rows[static_cast<std::size_t>(z_rank)].z_rank = z_rank + 1;
  return RectDiagram::from_rows(std::move(rows));
}

RectDiagram v_commute(const RectDiagram& d, int col) {
  const auto verts = derive_verticals(d);
  require_col(d, col);
  const int n = d.size();
  const int other = next_col(col, n);
  const auto& a = verts[static_cast<std::size_t>(col - 1)];
  const auto& b = verts[static_cast<std::size_t>(other - 1)];
  if (a.low() == b.low() || a.low() == b.high() || a.high() == b.low() || a.high() == b.high()) {
    throw MoveRejected("vc: columns " + std::to_string(col) + " and " + std::to_string(other) + " share a row");
  }
  if (interleaved(a.low(), a.high(), b.low(), b.high())) {
    throw MoveRejected("vc: vertical supports of columns " + std::to_string(col) + " and " +
                       std::to_string(other) + " interleave");
  }
  auto swap_col = [col, other](int c) { return c == col ? other : c == other ? col : c; };
  auto rows = d.rows();
  for (auto& h : rows) {
    h.tail_col = swap_col(h.tail_col);
    h.head_col = swap_col(h.head_col);
  }
  return RectDiagram::from_rows(std::move(rows));
}

RectDiagram stabilize(const RectDiagram& d, int row, int col, Quadrant q) {
  require_valid(d);
  require_row(d, row);
  const auto& h = d.row(row);
  if (h.tail_col != col && h.head_col != col) {
    throw MoveRejected("stab: (" + std::to_string(row) + "," + std::to_string(col) + ") is not a corner");
  }
  const bool at_head = h.head_col == col;
  const int m = d.size() + 1;
  const bool east = is_east(q);
  const bool north = is_north(q);
  // The inserted column sits next to `col`, the inserted row next to `row`.
  const int new_col = east ? col + 1 : col;
  const int new_row = north ? row + 1 : row;
  auto map_col = [&](int c) { return c < new_col ? c : c + 1; };
  auto map_row = [&](int z) { return z < new_row ? z : z + 1; };

  std::vector<HorizArc> rows;
  rows.reserve(static_cast<std::size_t>(m));
  for (const auto& r : d.rows()) {
    HorizArc x{map_row(r.z_rank), map_col(r.tail_col), map_col(r.head_col), r.sweep};
    if (r.z_rank == row) (at_head ? x.head_col : x.tail_col) = new_col;
    rows.push_back(x);
  }
  // Tiny arc on the inserted row between the inserted column and the corner column.
  HorizArc tiny;
  tiny.z_rank = new_row;
  tiny.tail_col = at_head ? new_col : map_col(col);
  tiny.head_col = at_head ? map_col(col) : new_col;
  tiny.sweep = tiny.head_col == next_col(tiny.tail_col, m) ? Sweep::Forward : Sweep::Backward;
  rows.push_back(tiny);
  return RectDiagram::from_rows(std::move(rows));
}

RectDiagram destabilize(const RectDiagram& d, int row, int col) {
  require_valid(d);
  require_row(d, row);
  require_col(d, col);
  const int n = d.size();
  const std::string where = "destab: (" + std::to_string(row) + "," + std::to_string(col) + ")";
  if (n < 3) throw MoveRejected(where + ": grid too small to destabilize");
  const auto& h = d.row(row);
  if (h.tail_col != col && h.head_col != col) throw MoveRejected(where + " is not a corner");
  const bool at_head = h.head_col == col;
  const int far_col = at_head ? h.tail_col : h.head_col;
  if (!interior_columns(d, row).empty()) throw MoveRejected(where + ": horizontal arc is not a notch edge");
  int far_row = 0;
  for (const auto& r : d.rows()) {
    if (at_head && r.tail_col == col) far_row = r.z_rank;
    if (!at_head && r.head_col == col) far_row = r.z_rank;
  }
  if (far_row != row + 1 && far_row != row - 1) throw MoveRejected(where + ": vertical arc is not a notch edge");

  auto map_col = [col](int c) { return c > col ? c - 1 : c; };
  auto map_row = [row](int z) { return z > row ? z - 1 : z; };
  std::vector<HorizArc> rows;
  for (const auto& r : d.rows()) {
    if (r.z_rank == row) continue;
    HorizArc x = r;
    if (x.z_rank == far_row) (at_head ? x.tail_col : x.head_col) = far_col;
    x.z_rank = map_row(x.z_rank);
    x.tail_col = map_col(x.tail_col);
    x.head_col = map_col(x.head_col);
    rows.push_back(x);
  }
  auto out = RectDiagram::from_rows_unchecked(n - 1, std::move(rows));
  auto rep = validate(out);
  if (!rep.ok()) throw MoveRejected(where + ": result is not a valid diagram (" + rep.to_string() + ")");
  return RectDiagram::from_rows(out.rows());
}

RectDiagram rotate_theta(const RectDiagram& d, int k) {
  require_valid(d);
  if (k < 0 || k >= d.size()) throw MoveRejected("rot: k must satisfy 0 <= k < n");
  return rotate_columns(d, k);
}

RectDiagram apply(const RectDiagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::Flip: return flip(d, m.row);
    case MoveKind::HCommute: return h_commute(d, m.row);
    case MoveKind::VCommute: return v_commute(d, m.col);
    case MoveKind::Stabilize: return stabilize(d, m.row, m.col, m.quadrant);
    case MoveKind::Destabilize: return destabilize(d, m.row, m.col);
    case MoveKind::RotateTheta: return rotate_theta(d, m.k);
  }
  throw Error("unknown move kind");
}

std::optional<RectDiagram> try_apply(const RectDiagram& d, const Move& m) {
  try {
    return apply(d, m);
  } catch (const MoveRejected&) {
    return std::nullopt;
  }
}

Move inverse(const RectDiagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::Flip:
    case MoveKind::HCommute:
    case MoveKind::VCommute:
      return m;
    case MoveKind::RotateTheta:
      return Move::rotate(m.k == 0 ? 0 : d.size() - m.k);
    case MoveKind::Stabilize:
      // Middle corner of the notch: inserted row x inserted column.
      return Move::destabilize(is_north(m.quadrant) ? m.row + 1 : m.row,
                               is_east(m.quadrant) ? m.col + 1 : m.col);
    case MoveKind::Destabilize: {
      const auto& h = d.row(m.row);
      const bool at_head = h.head_col == m.col;
      const int far_col = at_head ? h.tail_col : h.head_col;
      int far_row = 0;
      for (const auto& r : d.rows()) {
        if (at_head && r.tail_col == m.col) far_row = r.z_rank;
        if (!at_head && r.head_col == m.col) far_row = r.z_rank;
      }
      const bool east = m.col == next_col(far_col, d.size());
      const bool north = m.row == far_row + 1;
      const int c = far_col > m.col ? far_col - 1 : far_col;
      const int z = far_row > m.row ? far_row - 1 : far_row;
      return Move::stabilize(z, c, make_quadrant(east, north));
    }
  }
  throw Error("unknown move kind");
}

std::vector<Move> candidate_moves(const RectDiagram& d) {
  const int n = d.size();
  std::vector<Move> out;
  for (int z = 1; z <= n; ++z) out.push_back(Move::flip(z));
  for (int z = 1; z < n; ++z) out.push_back(Move::h_commute(z));
  for (int c = 1; c <= n; ++c) out.push_back(Move::v_commute(c));
  for (int k = 1; k < n; ++k) out.push_back(Move::rotate(k));
  for (const auto& c : corners(d)) {
    for (auto q : {Quadrant::NE, Quadrant::NW, Quadrant::SE, Quadrant::SW}) {
      out.push_back(Move::stabilize(c.row, c.col, q));
    }
  }
  for (const auto& c : corners(d)) out.push_back(Move::destabilize(c.row, c.col));
  return out;
}

std::string to_string(MoveLabel l) {
  switch (l) {
    case MoveLabel::Legendrian: return "legendrian";
    case MoveLabel::TransversePlus: return "transverse_plus";
    case MoveLabel::Topological: return "topological";
  }
  return "?";
}

MoveClass classify_delta(const InvariantReport& before, const InvariantReport& after) {
  MoveClass mc;
  mc.delta_tb = after.tb - before.tb;
  mc.delta_rot = after.rot - before.rot;
  mc.delta_sl_plus = after.sl_plus - before.sl_plus;
  if (mc.delta_tb == 0 && mc.delta_rot == 0 && mc.delta_sl_plus == 0) {
    mc.label = MoveLabel::Legendrian;
  } else if (mc.delta_sl_plus == 0 && mc.delta_tb == mc.delta_rot && (mc.delta_tb == 1 || mc.delta_tb == -1)) {
    mc.label = MoveLabel::TransversePlus;
  } else {
    mc.label = MoveLabel::Topological;
  }
  return mc;
}

MoveClass classify(const RectDiagram& d, const Move& m) {
  return classify_delta(invariants(d), invariants(apply(d, m)));
}

}  // namespace rdg
