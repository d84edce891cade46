#pragma once

// Classical invariants of the Legendrian link represented by a rectangular
// diagram in (R^3, ker(dz + r^2 dtheta)):
//
//   tb  = writhe - (down + up) / 2
//   rot = winding + (down - up) / 2
//   sl+ = tb - rot,  sl- = tb + rot      (sl+ = writhe - winding when braided)
//
// Vertical arcs pass over horizontal arcs. A crossing is positive when
// det[over; under] > 0 in (theta, z) coordinates.

#include <optional>
#include <vector>

#include "rdg/diagram.hpp"

namespace rdg {

struct Crossing {
  int row = 0;  // under strand (horizontal)
  int col = 0;  // over strand (vertical)
  int sign = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct CornerCensus {
  int up = 0;
  int down = 0;
};

enum class CornerKind { Smooth, UpCusp, DownCusp };

struct InvariantReport {
  int omega = 0;
  int winding = 0;
  int up = 0;
  int down = 0;
  int tb = 0;
  int rot = 0;
  int sl_plus = 0;
  int sl_minus = 0;
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

std::vector<Crossing> crossings(const RectDiagram& d);
int writhe(const RectDiagram& d);

/// Signed count of horizontal arcs covering the gap between column `gap` and
/// its cyclic successor. Gaps are the only generic positions; `gap` in 1..n.
int winding_at_gap(const RectDiagram& d, int gap);

/// theta_star is a position on the column-rank circle [0, n) with column c at
/// position c (mod n). Throws rdg::Error when theta_star sits on a column.
int winding(const RectDiagram& d, std::optional<double> theta_star = std::nullopt);

CornerKind classify_corner(const RectDiagram& d, const Corner& c);
CornerCensus corner_census(const RectDiagram& d);

int thurston_bennequin(const RectDiagram& d);
/// Throws rdg::Error if down - up is odd.
int rotation(const RectDiagram& d);
int self_linking_plus(const RectDiagram& d);
int self_linking_minus(const RectDiagram& d);

InvariantReport invariants(const RectDiagram& d);

}  // namespace rdg
