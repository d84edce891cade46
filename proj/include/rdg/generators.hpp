#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdg/diagram.hpp"

namespace rdg {

/// Standard Legendrian unknot, n = 2: row 1: 1 -> 2 (+), row 2: 2 -> 1 (-).
RectDiagram gen_unknot_rect();
/// Braided form of the same unknot: both rows forward.
RectDiagram gen_unknot_braided();

/// A braid word: nonzero generator indices, sign = crossing sign (sigma_i or
/// its inverse).
using BraidWord = std::vector<int>;

/// Accepts integers separated by spaces and/or commas, e.g. "1 1 -2".
BraidWord parse_braid_word(std::string_view text);

/// Braided rectangular diagram of the closure of `word` on `strands` strands.
/// Every generator contributes exactly one crossing of the same sign, so
/// writhe = algebraic word length and winding = strands.
RectDiagram gen_braid_closure(const BraidWord& word, int strands);

/// Closure of (sigma_1 ... sigma_{p-1})^q on p strands.
RectDiagram gen_torus_knot(int p, int q);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};
std::string to_string(const Rational& r);

struct CableSpec {
  int r = 0;
  int s = 0;
};

/// Slope -(2r+s)/(11r+5s) of the ruling curve with train-track weights r, s, r+s.
Rational cable_slope(const CableSpec& spec);
/// The curve is a (2r+s, r+s)-cable of the (2,3)-torus knot.
std::pair<int, int> cable_type(const CableSpec& spec);

}  // namespace rdg
