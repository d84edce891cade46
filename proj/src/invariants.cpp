#include "rdg/invariants.hpp"

#include <cmath>

namespace rdg {

namespace {

// Cyclic distance walked from `from` to `to` in the direction of `s`.
int walk_distance(int from, int to, Sweep s, int n) {
  int delta = s == Sweep::Forward ? to - from : from - to;
  return ((delta % n) + n) % n;
}

bool covers_gap(const HorizArc& h, int gap, int n) {
  // The gap lies between `gap` and its successor. A forward arc crosses it when
  // it leaves `gap`; a backward arc when it leaves the successor.
  const int leave = h.forward() ? gap : next_col(gap, n);
  return walk_distance(h.tail_col, leave, h.sweep, n) < walk_distance(h.tail_col, h.head_col, h.sweep, n);
}

}  // namespace

std::vector<Crossing> crossings(const RectDiagram& d) {
  const auto verts = derive_verticals(d);
  std::vector<Crossing> out;
  for (const auto& h : d.rows()) {
    for (int c : interior_columns(d, h.z_rank)) {
      const auto& v = verts[static_cast<std::size_t>(c - 1)];
      if (v.low() < h.z_rank && h.z_rank < v.high()) {
        // over = (0, dir), under = (sweep, 0): det[over; under] = -dir * sweep
        const int sign = -static_cast<int>(v.dir) * sign_of(h.sweep);
        out.push_back({h.z_rank, c, sign});
      }
    }
  }
  return out;
}

int writhe(const RectDiagram& d) {
  int w = 0;
  for (const auto& x : crossings(d)) w += x.sign;
  return w;
}

int winding_at_gap(const RectDiagram& d, int gap) {
  require_valid(d);
  const int n = d.size();
  if (gap < 1 || gap > n) throw Error("gap index must lie in 1..n");
  int w = 0;
  for (const auto& h : d.rows()) {
    if (covers_gap(h, gap, n)) w += sign_of(h.sweep);
  }
  return w;
}

int winding(const RectDiagram& d, std::optional<double> theta_star) {
  const int n = d.size();
  if (!theta_star) return winding_at_gap(d, n);
  double t = std::fmod(*theta_star, static_cast<double>(n));
  if (t < 0) t += n;
  if (!std::isfinite(t) || t == std::floor(t)) {
    throw Error("winding: theta position " + std::to_string(*theta_star) + " coincides with a column level");
  }
  const int g = static_cast<int>(std::floor(t));
  return winding_at_gap(d, g == 0 ? n : g);
}

CornerKind classify_corner(const RectDiagram& d, const Corner& c) {
  const auto& h = d.row(c.row);
  // The vertical at this column: it arrives at the tail corner, leaves from the head corner.
  int other_row = 0;
  for (const auto& r : d.rows()) {
    if (c.at_head && r.tail_col == c.col) other_row = r.z_rank;
    if (!c.at_head && r.head_col == c.col) other_row = r.z_rank;
  }
  const bool up = c.at_head ? other_row > c.row : c.row > other_row;
  const int vertical_motion = up ? -1 : 1;
  if (vertical_motion == sign_of(h.sweep)) return CornerKind::Smooth;
  return up ? CornerKind::UpCusp : CornerKind::DownCusp;
}

CornerCensus corner_census(const RectDiagram& d) {
  const auto verts = derive_verticals(d);
  CornerCensus cc;
  for (const auto& h : d.rows()) {
    for (int col : {h.tail_col, h.head_col}) {
      const auto& v = verts[static_cast<std::size_t>(col - 1)];
      const int vertical_motion = v.dir == VertDir::Up ? -1 : 1;
      if (vertical_motion == sign_of(h.sweep)) continue;
      (v.dir == VertDir::Up ? cc.up : cc.down) += 1;
    }
  }
  return cc;
}

InvariantReport invariants(const RectDiagram& d) {
  InvariantReport r;
  r.omega = writhe(d);
  r.winding = winding(d);
  const auto cc = corner_census(d);
  r.up = cc.up;
  r.down = cc.down;
  if ((r.down + r.up) % 2 != 0) {
    throw Error("odd cusp count: diagram has no consistent orientation structure");
  }
  r.tb = r.omega - (r.down + r.up) / 2;
  r.rot = r.winding + (r.down - r.up) / 2;
  r.sl_plus = r.tb - r.rot;
  r.sl_minus = r.tb + r.rot;
  if (is_braided(d) && r.sl_plus != r.omega - r.winding) {
    throw Error("self-linking consistency check failed on a braided diagram");
  }
  return r;
}

int thurston_bennequin(const RectDiagram& d) { return invariants(d).tb; }
int rotation(const RectDiagram& d) { return invariants(d).rot; }
int self_linking_plus(const RectDiagram& d) { return invariants(d).sl_plus; }
int self_linking_minus(const RectDiagram& d) { return invariants(d).sl_minus; }

}  // namespace rdg
