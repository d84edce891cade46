#include "rdg/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace rdg {

RectDiagram gen_unknot_rect() {
  return RectDiagram::from_spec({{1, 2, Sweep::Forward}, {2, 1, Sweep::Backward}});
}

RectDiagram gen_unknot_braided() {
  return RectDiagram::from_spec({{1, 2, Sweep::Forward}, {2, 1, Sweep::Forward}});
}

BraidWord parse_braid_word(std::string_view text) {
  BraidWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != ',') ++j;
    int v = 0;
    const auto tok = text.substr(i, j - i);
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v == 0) {
      throw Error("bad braid generator '" + std::string(tok) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

namespace {

// Builds a closed braid as a sequence of jumps. Horizontal arcs are nodes in a
// global z-order; each strand position ("band") owns a contiguous block of that
// order, so a jump only crosses the arcs whose nodes it passes inside the two
// bands it connects.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(int strands) : current_(static_cast<std::size_t>(strands)) {
    for (int p = 0; p < strands; ++p) {
      const int id = new_node();
      order_.push_back(id);
      anchors_.push_back(id);
      current_[static_cast<std::size_t>(p)] = id;
    }
  }

  void letter(int gen) {
    const auto i = static_cast<std::size_t>(std::abs(gen) - 1);
    const int a = current_[i];
    const int b = current_[i + 1];
    int lower = 0;
    int upper = 0;
    if (gen > 0) {
      // Upper strand drops over the lower one, then the lower climbs freely.
      lower = insert_below(a);
      jump(b, lower);
      upper = insert_above(b);
      jump(a, upper);
    } else {
      upper = insert_above(b);
      jump(a, upper);
      lower = insert_below(a);
      jump(b, lower);
    }
    current_[i] = lower;
    current_[i + 1] = upper;
  }

  RectDiagram close() {
    for (std::size_t p = 0; p < current_.size(); ++p) {
      const int anchor = anchors_[p];
      if (current_[p] != anchor) {
        jump(current_[p], anchor);
      } else {
        const int x = insert_above(anchor);
        jump(anchor, x);
        jump(x, anchor);
      }
    }
    std::vector<HorizArc> rows;
    rows.reserve(order_.size());
    for (std::size_t z = 0; z < order_.size(); ++z) {
      const auto& node = nodes_[static_cast<std::size_t>(order_[z])];
      rows.push_back({static_cast<int>(z) + 1, node.tail, node.head, Sweep::Forward});
    }
    return RectDiagram::from_rows(std::move(rows));
  }

 private:
  struct Node {
    int tail = 0;
    int head = 0;
  };

  int new_node() {
    nodes_.push_back({});
    return static_cast<int>(nodes_.size()) - 1;
  }

  int insert_below(int id) {
    const int x = new_node();
    order_.insert(std::find(order_.begin(), order_.end(), id), x);
    return x;
  }

  int insert_above(int id) {
    const int x = new_node();
    order_.insert(std::find(order_.begin(), order_.end(), id) + 1, x);
    return x;
  }

  void jump(int from, int to) {
    ++columns_;
    nodes_[static_cast<std::size_t>(from)].head = columns_;
    nodes_[static_cast<std::size_t>(to)].tail = columns_;
  }

  std::vector<Node> nodes_;
  std::vector<int> order_;  // bottom to top
  std::vector<int> anchors_;
  std::vector<int> current_;
  int columns_ = 0;
};

}  // namespace

RectDiagram gen_braid_closure(const BraidWord& word, int strands) {
  if (strands < 2) throw Error("braid closure needs at least 2 strands");
  if (word.empty()) throw Error("braid word must be nonempty");
  for (int g : word) {
    if (g == 0 || std::abs(g) >= strands) {
      throw Error("generator " + std::to_string(g) + " out of range for " + std::to_string(strands) + " strands");
    }
  }
  ClosureBuilder b(strands);
  for (int g : word) b.letter(g);
  return b.close();
}

RectDiagram gen_torus_knot(int p, int q) {
  if (p < 2 || q < 1) throw Error("torus knot needs p >= 2 and q >= 1");
  BraidWord w;
  for (int rep = 0; rep < q; ++rep) {
    for (int i = 1; i < p; ++i) w.push_back(i);
  }
  return gen_braid_closure(w, p);
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational cable_slope(const CableSpec& spec) {
  if (spec.r < 0 || spec.s < 0) throw Error("train-track weights must be nonnegative");
  if (spec.r == 0 && spec.s == 0) throw Error("train-track weights (0, 0) do not define a curve");
  std::int64_t num = -(2 * std::int64_t{spec.r} + spec.s);
  std::int64_t den = 11 * std::int64_t{spec.r} + 5 * std::int64_t{spec.s};
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

std::pair<int, int> cable_type(const CableSpec& spec) {
  if (spec.r < 0 || spec.s < 0 || (spec.r == 0 && spec.s == 0)) {
    throw Error("train-track weights must be nonnegative and not both zero");
  }
  return {2 * spec.r + spec.s, spec.r + spec.s};
}

}  // namespace rdg
