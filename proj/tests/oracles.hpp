#pragma once

// Independent reference implementations used by the tests:
//  - a random valid-diagram generator,
//  - crossings by painting arcs onto a doubled grid,
//  - link components by union-find over columns.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "rdg/diagram.hpp"

namespace oracle {

inline rdg::RectDiagram random_diagram(std::mt19937& rng, int n) {
  std::vector<int> tails(static_cast<std::size_t>(n)), heads(static_cast<std::size_t>(n));
  std::iota(tails.begin(), tails.end(), 1);
  std::iota(heads.begin(), heads.end(), 1);
  std::shuffle(tails.begin(), tails.end(), rng);
  for (;;) {
    std::shuffle(heads.begin(), heads.end(), rng);
    bool ok = true;
    for (std::size_t i = 0; i < heads.size(); ++i) ok = ok && heads[i] != tails[i];
    if (ok) break;
  }
  std::bernoulli_distribution coin(0.5);
  std::vector<rdg::HorizArc> rows;
  for (int z = 1; z <= n; ++z) {
    const auto i = static_cast<std::size_t>(z - 1);
    rows.push_back({z, tails[i], heads[i], coin(rng) ? rdg::Sweep::Forward : rdg::Sweep::Backward});
  }
  return rdg::RectDiagram::from_rows(rows);
}

/// `count` diagrams with 2 <= n <= max_n.
inline std::vector<rdg::RectDiagram> corpus(unsigned seed, int count, int max_n = 8) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size(2, max_n);
  std::vector<rdg::RectDiagram> out;
  for (int i = 0; i < count; ++i) out.push_back(random_diagram(rng, size(rng)));
  return out;
}

struct RasterCrossing {
  int row, col, sign;
  auto tie() const { return std::tie(row, col, sign); }
  bool operator<(const RasterCrossing& o) const { return tie() < o.tie(); }
  bool operator==(const RasterCrossing& o) const { return tie() == o.tie(); }
};

/// Column c sits at x = 2c - 1 on a cyclic strip of width 2n, row z at y = 2z - 1.
/// Every arc is walked cell by cell; a cell visited by a horizontal and a
/// vertical walk away from both of their endpoints is a crossing. The sign is
/// the determinant of the two walking directions (vertical first).
inline std::vector<RasterCrossing> raster_crossings(const rdg::RectDiagram& d) {
  const int n = d.size();
  const int w = 2 * n;
  struct Mark {
    int row = 0, dx = 0;  // horizontal walk through the cell
    int col = 0, dy = 0;  // vertical walk through the cell
  };
  std::map<std::pair<int, int>, Mark> cells;
  std::map<int, int> tail_row, head_row;
  for (const auto& h : d.rows()) {
    tail_row[h.tail_col] = h.z_rank;
    head_row[h.head_col] = h.z_rank;
    const int dx = rdg::sign_of(h.sweep);
    const int y = 2 * h.z_rank - 1;
    int x = 2 * h.tail_col - 1;
    const int end = 2 * h.head_col - 1;
    for (x = ((x + dx) % w + w) % w; x != end; x = ((x + dx) % w + w) % w) {
      auto& m = cells[{x, y}];
      m.row = h.z_rank;
      m.dx = dx;
    }
  }
  for (int c = 1; c <= n; ++c) {
    const int from = head_row[c], to = tail_row[c];
    const int dy = to > from ? 1 : -1;
    const int x = 2 * c - 1;
    for (int y = 2 * from - 1 + dy; y != 2 * to - 1; y += dy) {
      auto& m = cells[{x, y}];
      m.col = c;
      m.dy = dy;
    }
  }
  std::vector<RasterCrossing> out;
  for (const auto& [xy, m] : cells) {
    if (m.row && m.col) out.push_back({m.row, m.col, -(m.dy * m.dx)});  // det[(0, dy); (dx, 0)]
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int union_find_components(const rdg::RectDiagram& d) {
  std::vector<int> parent(static_cast<std::size_t>(d.size()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& h : d.rows()) parent[static_cast<std::size_t>(find(h.tail_col))] = find(h.head_col);
  std::set<int> roots;
  for (int c = 1; c <= d.size(); ++c) roots.insert(find(c));
  return static_cast<int>(roots.size());
}

}  // namespace oracle
