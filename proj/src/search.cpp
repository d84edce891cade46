#include "rdg/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "rdg/invariants.hpp"

namespace rdg {

RectDiagram braid(const RectDiagram& d) {
  require_valid(d);
  RectDiagram out = d;
  for (const auto& h : d.rows()) {
    if (!h.forward()) out = flip(out, h.z_rank);
  }
  return out;
}

std::string to_string(MoveSet s) {
  switch (s) {
    case MoveSet::Legendrian: return "legendrian";
    case MoveSet::TransversePlus: return "transverse";
    case MoveSet::Topological: return "topological";
  }
  return "?";
}

MoveSet parse_move_set(std::string_view text) {
  if (text == "legendrian") return MoveSet::Legendrian;
  if (text == "transverse" || text == "transverse_plus") return MoveSet::TransversePlus;
  if (text == "topological") return MoveSet::Topological;
  throw Error("unknown move set '" + std::string(text) + "'");
}

bool admits(MoveSet set, MoveLabel label) {
  switch (set) {
    case MoveSet::Legendrian: return label == MoveLabel::Legendrian;
    case MoveSet::TransversePlus: return label != MoveLabel::Topological;
    case MoveSet::Topological: return true;
  }
  return false;
}

std::vector<Neighbor> neighbors(const RectDiagram& d, MoveSet set, int max_grid) {
  const auto before = invariants(d);
  std::vector<Neighbor> out;
  for (const auto& m : candidate_moves(d)) {
    if (m.kind == MoveKind::Stabilize && d.size() + 1 > max_grid) continue;
    auto next = try_apply(d, m);
    if (!next || next->size() > max_grid) continue;
    auto cls = classify_delta(before, invariants(*next));
    if (!admits(set, cls.label)) continue;
    out.push_back({m, std::move(*next), cls});
  }
  return out;
}

namespace {

struct TreeNode {
  CanonicalKey parent;
  Move move;  // parent representative --move--> this representative
  RectDiagram rep;
  int depth = 0;
  bool root = false;
};

using Tree = std::unordered_map<CanonicalKey, TreeNode>;

// Rotation k with rotate_columns(from, k) == to, if any.
std::optional<int> rotation_between(const RectDiagram& from, const RectDiagram& to) {
  if (from.size() != to.size()) return std::nullopt;
  for (int k = 0; k < from.size(); ++k) {
    if (rotate_columns(from, k) == to) return k;
  }
  return std::nullopt;
}

std::vector<CanonicalKey> chain_to_root(const Tree& tree, const CanonicalKey& key) {
  std::vector<CanonicalKey> out{key};
  while (!tree.at(out.back()).root) out.push_back(tree.at(out.back()).parent);
  return out;
}

class PathBuilder {
 public:
  explicit PathBuilder(RectDiagram start) : cur_(std::move(start)), inv_(invariants(cur_)) {}

  void step(const Move& m) {
    auto next = apply(cur_, m);
    auto after = invariants(next);
    path_.push_back({m, next, classify_delta(inv_, after)});
    cur_ = std::move(next);
    inv_ = after;
  }

  // Rotates the current diagram onto `rep` (same canonical key) when needed.
  void align(const RectDiagram& rep) {
    auto k = rotation_between(cur_, rep);
    if (!k) throw Error("internal: search representatives are not rotations of each other");
    if (*k != 0) step(Move::rotate(*k));
  }

  const RectDiagram& current() const { return cur_; }
  std::vector<PathStep> take() { return std::move(path_); }

 private:
  RectDiagram cur_;
  InvariantReport inv_;
  std::vector<PathStep> path_;
};

}  // namespace

EquivalenceCertificate equivalent(const RectDiagram& source, const RectDiagram& target, SearchConfig cfg) {
  require_valid(source);
  require_valid(target);
  if (cfg.max_grid == 0) cfg.max_grid = std::max(source.size(), target.size()) + 2;
  if (cfg.max_grid < std::max(source.size(), target.size())) {
    throw Error("max_grid must be at least the size of both diagrams");
  }
  if (cfg.max_depth < 0 || cfg.node_budget <= 0) throw Error("search bounds must be positive");

  EquivalenceCertificate cert;
  const auto inv_s = invariants(source);
  const auto inv_t = invariants(target);
  auto obstruct = [&cert](const char* what) {
    cert.obstruction = what;
    cert.reason = "invariant";
    return cert;
  };
  if (cfg.move_set == MoveSet::Legendrian) {
    if (inv_s.tb != inv_t.tb) return obstruct("tb");
    if (inv_s.rot != inv_t.rot) return obstruct("rot");
  } else if (cfg.move_set == MoveSet::TransversePlus) {
    if (inv_s.sl_plus != inv_t.sl_plus) return obstruct("sl_plus");
  }
  if (cfg.braided_only && (!is_braided(source) || !is_braided(target))) {
    throw Error("braided-only search needs braided endpoints");
  }

  const auto key_s = canonicalize(source);
  const auto key_t = canonicalize(target);
  std::optional<CanonicalKey> meet;
  Tree fwd, bwd;
  fwd.emplace(key_s, TreeNode{{}, {}, source, 0, true});
  bwd.emplace(key_t, TreeNode{{}, {}, target, 0, true});
  if (key_s == key_t) meet = key_s;

  std::vector<CanonicalKey> front_f{key_s}, front_b{key_t};
  int depth_f = 0, depth_b = 0;
  bool budget_hit = false;
  while (!meet && depth_f + depth_b < cfg.max_depth && !front_f.empty() && !front_b.empty()) {
    const bool forward = front_f.size() <= front_b.size();
    Tree& tree = forward ? fwd : bwd;
    const Tree& other = forward ? bwd : fwd;
    auto& frontier = forward ? front_f : front_b;
    std::vector<CanonicalKey> next_frontier;
    for (const auto& key : frontier) {
      const TreeNode& node = tree.at(key);
      const RectDiagram rep = node.rep;
      const int depth = node.depth;
      for (auto& nb : neighbors(rep, cfg.move_set, cfg.max_grid)) {
        if (cfg.braided_only && !is_braided(nb.diagram)) continue;
        auto k = canonicalize(nb.diagram);
        if (tree.count(k)) continue;
        ++cert.nodes_explored;
        tree.emplace(k, TreeNode{key, nb.move, std::move(nb.diagram), depth + 1, false});
        if (other.count(k)) {
          meet = k;
          break;
        }
        next_frontier.push_back(std::move(k));
        if (static_cast<std::int64_t>(fwd.size() + bwd.size()) >= cfg.node_budget) {
          budget_hit = true;
          break;
        }
      }
      if (meet || budget_hit) break;
    }
    if (budget_hit && !meet) break;
    frontier = std::move(next_frontier);
    (forward ? depth_f : depth_b) += 1;
  }

  if (!meet) {
    cert.reason = budget_hit ? "budget" : "depth";
    return cert;
  }

  PathBuilder pb(source);
  auto fchain = chain_to_root(fwd, *meet);  // meet ... source
  for (auto it = fchain.rbegin() + 1; it != fchain.rend(); ++it) pb.step(fwd.at(*it).move);
  auto bchain = chain_to_root(bwd, *meet);  // meet ... target
  for (std::size_t i = 0; i + 1 < bchain.size(); ++i) {
    const TreeNode& child = bwd.at(bchain[i]);
    const TreeNode& parent = bwd.at(bchain[i + 1]);
    pb.align(child.rep);
    pb.step(inverse(parent.rep, child.move));
  }
  pb.align(target);
  cert.verdict = Verdict::Equivalent;
  cert.path = pb.take();
  return cert;
}

RectDiagram replay(const RectDiagram& source, const EquivalenceCertificate& cert, MoveSet set) {
  RectDiagram cur = source;
  auto inv = invariants(cur);
  for (const auto& step : cert.path) {
    auto next = apply(cur, step.move);
    if (!(next == step.after)) throw Error("replay: snapshot mismatch after " + to_string(step.move));
    auto after = invariants(next);
    auto cls = classify_delta(inv, after);
    if (!admits(set, cls.label)) {
      throw Error("replay: move " + to_string(step.move) + " is " + to_string(cls.label) +
                  ", not admitted by the " + to_string(set) + " move set");
    }
    cur = std::move(next);
    inv = after;
  }
  return cur;
}

}  // namespace rdg
