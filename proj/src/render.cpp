#include "rdg/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

#include "rdg/invariants.hpp"

namespace rdg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool wraps(const HorizArc& h) { return h.forward() ? h.head_col < h.tail_col : h.head_col > h.tail_col; }

using Interval = std::pair<double, double>;

std::vector<Interval> cut(std::vector<Interval> in, double lo, double hi) {
  std::vector<Interval> out;
  for (const auto& [a, b] : in) {
    if (hi <= a || lo >= b) {
      out.emplace_back(a, b);
      continue;
    }
    if (a < lo) out.emplace_back(a, lo);
    if (hi < b) out.emplace_back(hi, b);
  }
  return out;
}

}  // namespace

std::string render_svg(const RectDiagram& d, const RenderOptions& opt) {
  require_valid(d);
  const int n = d.size();
  const double x0 = opt.margin;
  const double x1 = opt.margin + n * opt.cell;
  auto xc = [&](int col) { return opt.margin + (col - 0.5) * opt.cell; };
  auto yz = [&](int z) { return opt.margin + (n - z + 0.5) * opt.cell; };
  const double width = x1 + opt.margin;
  const double height = n * opt.cell + 2 * opt.margin;

  std::vector<std::vector<int>> over(static_cast<std::size_t>(n) + 1);
  for (const auto& c : crossings(d)) over[static_cast<std::size_t>(c.row)].push_back(c.col);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
      << "  <rect class=\"cylinder\" x=\"" << num(x0) << "\" y=\"" << num(opt.margin) << "\" width=\""
      << num(x1 - x0) << "\" height=\"" << num(n * opt.cell)
      << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";

  for (const auto& h : d.rows()) {
    const double y = yz(h.z_rank);
    const double a = xc(h.tail_col), b = xc(h.head_col);
    std::vector<Interval> pieces;
    if (!wraps(h)) {
      pieces.emplace_back(std::min(a, b), std::max(a, b));
    } else if (h.forward()) {
      pieces = {{x0, b}, {a, x1}};
    } else {
      pieces = {{x0, a}, {b, x1}};
    }
    auto& cols = over[static_cast<std::size_t>(h.z_rank)];
    std::sort(cols.begin(), cols.end());
    for (int c : cols) pieces = cut(std::move(pieces), xc(c) - opt.gap, xc(c) + opt.gap);
    out << "  <path class=\"horizontal\" data-row=\"" << h.z_rank << "\" data-gaps=\"" << cols.size() << "\" d=\"";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      out << (i ? " " : "") << 'M' << num(pieces[i].first) << ' ' << num(y) << " L" << num(pieces[i].second) << ' '
          << num(y);
    }
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    const double dir = h.forward() ? 1 : -1;
    const double s = opt.cell * 0.15;
    out << "  <path class=\"arrow\" d=\"M" << num(b - dir * 1.5 * s) << ' ' << num(y - s * 0.6) << " L"
        << num(b - dir * 0.5 * s) << ' ' << num(y) << " L" << num(b - dir * 1.5 * s) << ' ' << num(y + s * 0.6)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (wraps(h)) {
      for (double x : {x0, x1}) {
        out << "  <path class=\"wrap-marker\" data-row=\"" << h.z_rank << "\" d=\"M" << num(x - dir * s) << ' '
            << num(y - s) << " L" << num(x) << ' ' << num(y) << " L" << num(x - dir * s) << ' ' << num(y + s)
            << "\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"2\"/>\n";
      }
    }
  }
  for (const auto& v : derive_verticals(d)) {
    out << "  <line class=\"vertical\" data-col=\"" << v.col << "\" x1=\"" << num(xc(v.col)) << "\" y1=\""
        << num(yz(v.from_row)) << "\" x2=\"" << num(xc(v.col)) << "\" y2=\"" << num(yz(v.to_row))
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  if (opt.labels) {
    for (int c = 1; c <= n; ++c) {
      out << "  <text class=\"label\" x=\"" << num(xc(c)) << "\" y=\"" << num(height - opt.margin / 3)
          << "\" font-size=\"11\" text-anchor=\"middle\">" << c << "</text>\n";
    }
    for (int z = 1; z <= n; ++z) {
      out << "  <text class=\"label\" x=\"" << num(opt.margin / 3) << "\" y=\"" << num(yz(z) + 4)
          << "\" font-size=\"11\" text-anchor=\"middle\">" << z << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const RectDiagram& d) {
  require_valid(d);
  const int n = d.size();
  const auto width = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::string> grid(static_cast<std::size_t>(n), std::string(width, ' '));
  auto at = [&](int z, std::size_t x) -> char& { return grid[static_cast<std::size_t>(n - z)][x]; };
  auto xc = [](int col) { return static_cast<std::size_t>(2 * col - 1); };

  for (const auto& h : d.rows()) {
    const int step = h.forward() ? 1 : -1;
    for (int c = h.tail_col; c != h.head_col;) {
      const int next = step > 0 ? next_col(c, n) : prev_col(c, n);
      const int lo = step > 0 ? c : next;  // gap between lo and its successor
      if (lo == n) {
        at(h.z_rank, 0) = '~';
        at(h.z_rank, width - 1) = '~';
      } else {
        at(h.z_rank, xc(lo) + 1) = '-';
      }
      if (next != h.head_col) at(h.z_rank, xc(next)) = '-';
      c = next;
    }
  }
  for (const auto& v : derive_verticals(d)) {
    for (int z = v.low() + 1; z < v.high(); ++z) at(z, xc(v.col)) = '|';
    at(v.from_row, xc(v.col)) = '+';
    at(v.to_row, xc(v.col)) = '+';
  }
  std::string out;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace rdg
