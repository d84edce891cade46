#pragma once

// Braiding (every diagram is Legendrian isotopic to a braided one, by flipping
// its backward arcs) and bounded bidirectional search over the move graph.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdg/diagram.hpp"
#include "rdg/moves.hpp"

namespace rdg {

/// Flips exactly the backward horizontal arcs.
RectDiagram braid(const RectDiagram& d);

enum class MoveSet { Legendrian, TransversePlus, Topological };

std::string to_string(MoveSet s);
MoveSet parse_move_set(std::string_view text);
bool admits(MoveSet set, MoveLabel label);

struct SearchConfig {
  int max_grid = 0;  // 0: max(n1, n2) + 2
  int max_depth = 10;
  MoveSet move_set = MoveSet::Legendrian;
  std::int64_t node_budget = 1'000'000;
  /// Markov-style search: only braided intermediate diagrams.
  bool braided_only = false;
};

struct Neighbor {
  Move move;
  RectDiagram diagram;
  MoveClass cls;
};

/// Applicable moves whose label is admitted by `set` and whose result has at
/// most `max_grid` rows, in deterministic candidate order.
std::vector<Neighbor> neighbors(const RectDiagram& d, MoveSet set, int max_grid);

enum class Verdict { Equivalent, NotFoundWithinBounds };

struct PathStep {
  Move move;
  RectDiagram after;
  MoveClass cls;
};

struct EquivalenceCertificate {
  Verdict verdict = Verdict::NotFoundWithinBounds;
  std::vector<PathStep> path;
  /// Set when an invariant rules out equivalence before searching:
  /// "tb", "rot" or "sl_plus".
  std::optional<std::string> obstruction;
  /// Why the search stopped without a path: "invariant", "depth", "budget".
  std::string reason;
  std::int64_t nodes_explored = 0;
};

EquivalenceCertificate equivalent(const RectDiagram& source, const RectDiagram& target, SearchConfig cfg = {});

/// Replays a certificate path from `source`, re-classifying every move.
/// Returns the final diagram; throws rdg::Error if a move is inapplicable, the
/// recorded snapshot disagrees, or a move's label is not admitted by `set`.
RectDiagram replay(const RectDiagram& source, const EquivalenceCertificate& cert, MoveSet set);

}  // namespace rdg
