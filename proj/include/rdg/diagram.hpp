#pragma once

// Rectangular diagrams on the cylinder C1 = {r = 1}.
//
// A diagram of size n has n horizontal arcs (one per z-rank) and n vertical
// arcs (one per theta-rank). Ranks are 1-based. The theta direction is cyclic,
// z is linear. Vertical arcs are derived from the horizontal ones: the vertical
// at column c runs from the row whose head is c to the row whose tail is c.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sweep : std::int8_t { Forward = 1, Backward = -1 };

constexpr int sign_of(Sweep s) noexcept { return static_cast<int>(s); }
constexpr Sweep opposite(Sweep s) noexcept {
  return s == Sweep::Forward ? Sweep::Backward : Sweep::Forward;
}

struct HorizArc {
  int z_rank = 0;
  int tail_col = 0;
  int head_col = 0;
  Sweep sweep = Sweep::Forward;

  bool forward() const noexcept { return sweep == Sweep::Forward; }
  friend bool operator==(const HorizArc&, const HorizArc&) = default;
};

enum class VertDir : std::int8_t { Up = 1, Down = -1 };

struct VertArc {
  int col = 0;
  int from_row = 0;
  int to_row = 0;
  VertDir dir = VertDir::Up;

  int low() const noexcept { return from_row < to_row ? from_row : to_row; }
  int high() const noexcept { return from_row < to_row ? to_row : from_row; }
  friend bool operator==(const VertArc&, const VertArc&) = default;
};

/// One endpoint of a horizontal arc. `at_head` tells whether the horizontal
/// arc arrives here (head) or leaves from here (tail).
struct Corner {
  int row = 0;
  int col = 0;
  bool at_head = false;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct Violation {
  int axiom = 0;  // 1..5, arc-presentation axiom number
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool violates(int axiom) const noexcept;
  std::string to_string() const;
};

using CanonicalKey = std::string;

/// Value type. `rows` may be malformed when built through `from_rows_unchecked`
/// (the parser and `validate` need to represent bad input); every other
/// factory and every move returns a valid diagram.
class RectDiagram {
 public:
  RectDiagram() = default;

  /// Builds and validates; throws rdg::Error listing the violated axioms.
  static RectDiagram from_rows(std::vector<HorizArc> rows);
  static RectDiagram from_rows_unchecked(int n, std::vector<HorizArc> rows);

  /// Shorthand for tests and generators: row i (1-based z-rank) is
  /// spec[i-1] = {tail, head, sweep}.
  struct RowSpec {
    int tail;
    int head;
    Sweep sweep;
  };
  static RectDiagram from_spec(const std::vector<RowSpec>& spec);

  int size() const noexcept { return n_; }
  const std::vector<HorizArc>& rows() const noexcept { return rows_; }
  /// Row at a given z-rank (1-based). Only meaningful on valid diagrams.
  const HorizArc& row(int z_rank) const { return rows_.at(static_cast<std::size_t>(z_rank - 1)); }

  friend bool operator==(const RectDiagram&, const RectDiagram&) = default;

 private:
  RectDiagram(int n, std::vector<HorizArc> rows) : n_(n), rows_(std::move(rows)) {}
  int n_ = 0;
  std::vector<HorizArc> rows_;
};

ValidationReport validate(const RectDiagram& d);

/// Throws rdg::Error when d is not valid.
void require_valid(const RectDiagram& d);

std::vector<VertArc> derive_verticals(const RectDiagram& d);
bool is_braided(const RectDiagram& d);
int components(const RectDiagram& d);

/// All 2n corners, in row order (tail then head of each row).
std::vector<Corner> corners(const RectDiagram& d);

/// Columns strictly inside the cyclic angular support of a row, in sweep order.
std::vector<int> interior_columns(const RectDiagram& d, int z_rank);
bool column_inside(const RectDiagram& d, int z_rank, int col);

/// Shifts every column rank by k (mod n). 0 <= k < n.
RectDiagram rotate_columns(const RectDiagram& d, int k);

CanonicalKey canonicalize(const RectDiagram& d);

/// 1-based cyclic successor / predecessor of a column rank.
constexpr int next_col(int c, int n) noexcept { return c == n ? 1 : c + 1; }
constexpr int prev_col(int c, int n) noexcept { return c == 1 ? n : c - 1; }

}  // namespace rdg
