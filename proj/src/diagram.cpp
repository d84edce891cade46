#include "rdg/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rdg/format.hpp"

namespace rdg {

bool ValidationReport::violates(int axiom) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const Violation& v) { return v.axiom == axiom; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << "axiom (" << violations[i].axiom << "): " << violations[i].message;
  }
  return out.str();
}

RectDiagram RectDiagram::from_rows(std::vector<HorizArc> rows) {
  const int n = static_cast<int>(rows.size());
  std::sort(rows.begin(), rows.end(),
            [](const HorizArc& a, const HorizArc& b) { return a.z_rank < b.z_rank; });
  RectDiagram d(n, std::move(rows));
  require_valid(d);
  return d;
}

RectDiagram RectDiagram::from_rows_unchecked(int n, std::vector<HorizArc> rows) {
  return RectDiagram(n, std::move(rows));
}

RectDiagram RectDiagram::from_spec(const std::vector<RowSpec>& spec) {
  std::vector<HorizArc> rows;
  rows.reserve(spec.size());
  int z = 1;
  for (const auto& s : spec) rows.push_back({z++, s.tail, s.head, s.sweep});
  return from_rows(std::move(rows));
}

ValidationReport validate(const RectDiagram& d) {
  ValidationReport rep;
  auto add = [&rep](int axiom, std::string msg) { rep.violations.push_back({axiom, std::move(msg)}); };
  const int n = d.size();
  if (n < 2) add(1, "grid size must be at least 2, got " + std::to_string(n));
  if (static_cast<int>(d.rows().size()) != n) {
    add(4, "expected " + std::to_string(n) + " horizontal arcs, got " +
               std::to_string(d.rows().size()));
  }

  std::vector<int> z_seen(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  std::vector<int> tails(z_seen.size(), 0), heads(z_seen.size(), 0);
  auto in_range = [n](int v) { return v >= 1 && v <= n; };
  for (const auto& h : d.rows()) {
    const std::string where = "row " + std::to_string(h.z_rank);
    if (!in_range(h.z_rank)) {
      add(4, "z-rank " + std::to_string(h.z_rank) + " outside 1.." + std::to_string(n));
    } else if (++z_seen[static_cast<std::size_t>(h.z_rank)] == 2) {
      add(4, "duplicate horizontal level z-rank " + std::to_string(h.z_rank));
    }
    if (!in_range(h.tail_col) || !in_range(h.head_col)) {
      add(3, where + ": column outside 1.." + std::to_string(n));
      continue;
    }
    if (h.tail_col == h.head_col) {
      add(1, where + ": horizontal arc needs two distinct columns");
    }
    ++tails[static_cast<std::size_t>(h.tail_col)];
    ++heads[static_cast<std::size_t>(h.head_col)];
  }
  for (int c = 1; c <= n; ++c) {
    const auto t = tails[static_cast<std::size_t>(c)];
    const auto hd = heads[static_cast<std::size_t>(c)];
    if (t != 1 || hd != 1) {
      const std::string msg = "column " + std::to_string(c) + " has " + std::to_string(t) +
                              " tail(s) and " + std::to_string(hd) + " head(s)";
      add(3, msg);
      add(5, msg + "; vertical arc cannot be oriented consistently");
    }
  }
  // Rows must be stored in z order for rank-indexed access.
  if (rep.ok()) {
    for (int z = 1; z <= n; ++z) {
      if (d.rows()[static_cast<std::size_t>(z - 1)].z_rank != z) {
        add(4, "rows not stored in ascending z-rank order");
        break;
      }
    }
  }
  return rep;
}

void require_valid(const RectDiagram& d) {
  auto rep = validate(d);
  if (!rep.ok()) throw Error("invalid rectangular diagram: " + rep.to_string());
}

std::vector<VertArc> derive_verticals(const RectDiagram& d) {
  require_valid(d);
  const int n = d.size();
  std::vector<VertArc> out(static_cast<std::size_t>(n));
  for (const auto& h : d.rows()) {
    out[static_cast<std::size_t>(h.head_col - 1)].from_row = h.z_rank;
    out[static_cast<std::size_t>(h.tail_col - 1)].to_row = h.z_rank;
  }
  for (int c = 1; c <= n; ++c) {
    auto& v = out[static_cast<std::size_t>(c - 1)];
    v.col = c;
    v.dir = v.to_row > v.from_row ? VertDir::Up : VertDir::Down;
  }
  return out;
}

bool is_braided(const RectDiagram& d) {
  return std::all_of(d.rows().begin(), d.rows().end(), [](const HorizArc& h) { return h.forward(); });
}

int components(const RectDiagram& d) {
  require_valid(d);
  const int n = d.size();
  // Follow row -> head column -> row whose tail is that column.
  std::vector<int> row_with_tail(static_cast<std::size_t>(n) + 1);
  for (const auto& h : d.rows()) row_with_tail[static_cast<std::size_t>(h.tail_col)] = h.z_rank;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    for (int z = start; !seen[static_cast<std::size_t>(z)];) {
      seen[static_cast<std::size_t>(z)] = true;
      z = row_with_tail[static_cast<std::size_t>(d.row(z).head_col)];
    }
  }
  return count;
}

std::vector<Corner> corners(const RectDiagram& d) {
  std::vector<Corner> out;
  out.reserve(d.rows().size() * 2);
  for (const auto& h : d.rows()) {
    out.push_back({h.z_rank, h.tail_col, false});
    out.push_back({h.z_rank, h.head_col, true});
  }
  return out;
}

std::vector<int> interior_columns(const RectDiagram& d, int z_rank) {
  const auto& h = d.row(z_rank);
  const int n = d.size();
  std::vector<int> out;
  int c = h.tail_col;
  while (true) {
    c = h.forward() ? next_col(c, n) : prev_col(c, n);
    if (c == h.head_col) break;
    out.push_back(c);
  }
  return out;
}

bool column_inside(const RectDiagram& d, int z_rank, int col) {
  const auto& h = d.row(z_rank);
  const int n = d.size();
  if (col == h.tail_col || col == h.head_col) return false;
  // Distance travelled from tail in the sweep direction.
  auto dist = [n, &h](int c) {
    int delta = h.forward() ? c - h.tail_col : h.tail_col - c;
    return ((delta % n) + n) % n;
  };
  return dist(col) < dist(h.head_col);
}

RectDiagram rotate_columns(const RectDiagram& d, int k) {
  const int n = d.size();
  if (k < 0 || k >= n) throw Error("rotation must satisfy 0 <= k < n");
  auto shift = [n, k](int c) { return (c - 1 + k) % n + 1; };
  std::vector<HorizArc> rows = d.rows();
  for (auto& h : rows) {
    h.tail_col = shift(h.tail_col);
    h.head_col = shift(h.head_col);
  }
  return RectDiagram::from_rows(std::move(rows));
}

CanonicalKey canonicalize(const RectDiagram& d) {
  require_valid(d);
  CanonicalKey best = serialize(d);
  for (int k = 1; k < d.size(); ++k) {
    auto s = serialize(rotate_columns(d, k));
    if (s < best) best = std::move(s);
  }
  return best;
}

}  // namespace rdg
