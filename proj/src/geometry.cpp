#include "rdg/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace rdg {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double column_angle(int col, int n) { return kTwoPi * (col - 0.5) / n; }

double wrap_delta(double d) { return std::remainder(d, kTwoPi); }

std::string fmt(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                            0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGlWeights = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                              0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

}  // namespace

std::string to_string(SegmentTag t) {
  switch (t) {
    case SegmentTag::NearHorizontal: return "near_horizontal";
    case SegmentTag::NearVertical: return "near_vertical";
    case SegmentTag::Radial: return "radial";
  }
  return "?";
}

EuclidPoint to_euclid(const CylPoint& p) { return {p.r * std::cos(p.theta), p.r * std::sin(p.theta), p.z}; }

EuclidPoint half_space_map(const EuclidPoint& p, double k) { return {p.x + k, p.y + k, p.z + k * (p.x - p.y)}; }

std::vector<std::vector<EuclidPoint>> LegendrianCurve::euclid_points() const {
  std::vector<std::vector<EuclidPoint>> out;
  for (const auto& loop : loops) {
    auto& pts = out.emplace_back();
    pts.reserve(loop.samples.size());
    for (const auto& s : loop.samples) pts.push_back(half_space_map(to_euclid(s), shift));
  }
  return out;
}

std::vector<std::vector<CylPoint>> LegendrianCurve::points() const {
  if (shift == 0) {
    std::vector<std::vector<CylPoint>> out;
    for (const auto& loop : loops) out.push_back(loop.samples);
    return out;
  }
  std::vector<std::vector<CylPoint>> out;
  for (const auto& loop : euclid_points()) {
    auto& pts = out.emplace_back();
    double prev = 0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const auto& e = loop[i];
      double th = std::atan2(e.y, e.x);
      if (i > 0) th = prev + wrap_delta(th - prev);
      pts.push_back({std::hypot(e.x, e.y), th, e.z});
      prev = th;
    }
  }
  return out;
}

std::size_t LegendrianCurve::count(SegmentTag t) const {
  std::size_t c = 0;
  for (const auto& loop : loops) {
    c += static_cast<std::size_t>(
        std::count_if(loop.pieces.begin(), loop.pieces.end(), [t](const Piece& p) { return p.tag == t; }));
  }
  return c;
}

LegendrianCurve embed(const RectDiagram& d, const EmbedOptions& opt) {
  require_valid(d);
  if (!(opt.r1 > 0) || !(opt.r1 < opt.r2)) throw Error("embed: need 0 < r1 < r2");
  if (opt.samples_per_arc < 2) throw Error("embed: samples_per_arc must be at least 2");
  const int n = d.size();
  const double r1sq = opt.r1 * opt.r1;
  const double r2sq = opt.r2 * opt.r2;
  const auto samples = static_cast<std::size_t>(opt.samples_per_arc);

  std::vector<int> row_with_tail(static_cast<std::size_t>(n) + 1);
  for (const auto& h : d.rows()) row_with_tail[static_cast<std::size_t>(h.tail_col)] = h.z_rank;

  LegendrianCurve curve;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    CurveLoop loop;
    auto add_piece = [&loop](SegmentTag tag, std::size_t first, std::size_t count) {
      loop.pieces.push_back({tag, first, count});
      for (std::size_t i = 0; i < count; ++i) loop.segment_tags.push_back(tag);
    };
    double theta = column_angle(d.row(start).tail_col, n);
    for (int z = start; !seen[static_cast<std::size_t>(z)];) {
      seen[static_cast<std::size_t>(z)] = true;
      const auto& h = d.row(z);
      const int next = row_with_tail[static_cast<std::size_t>(h.head_col)];
      const double ta = column_angle(h.tail_col, n);
      const double tb = column_angle(h.head_col, n);
      double span = std::fmod(tb - ta + 2 * kTwoPi, kTwoPi);
      if (!h.forward()) span = span - kTwoPi;
      const double z_h = h.z_rank;
      const double z_out = next;
      // Angular extent of the vertical arc; solves the corner matching exactly.
      const double delta = (z_out - z_h + r1sq * span) / (r2sq - r1sq);
      if (std::abs(delta) >= std::numbers::pi / n) {
        throw Error("embed: r2 too small for an " + std::to_string(n) + "-column diagram");
      }
      if (r1sq * std::abs(span + delta) >= 0.5) throw Error("embed: r1 too large");

      // Near-horizontal arc on r = r1.
      const std::size_t h_first = loop.samples.size();
      for (std::size_t j = 0; j < samples; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(samples - 1);
        const double dth = t * (span + delta);
        loop.samples.push_back({opt.r1, theta + dth, z_h - r1sq * dth});
      }
      add_piece(SegmentTag::NearHorizontal, h_first, samples - 1);
      const double theta_e = theta + span + delta;
      const double z_in = z_h - r1sq * (span + delta);
      add_piece(SegmentTag::Radial, loop.samples.size() - 1, 1);

      // Near-vertical arc on r = r2, from (theta_e, z_in) to (theta_e - delta, z_out).
      const std::size_t v_first = loop.samples.size();
      for (std::size_t j = 0; j < samples; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(samples - 1);
        const double zz = z_in + t * (z_out - z_in);
        loop.samples.push_back({opt.r2, theta_e - (zz - z_in) / r2sq, zz});
      }
      add_piece(SegmentTag::NearVertical, v_first, samples - 1);
      add_piece(SegmentTag::Radial, loop.samples.size() - 1, 1);
      theta = theta_e - delta;
      z = next;
    }
    curve.loops.push_back(std::move(loop));
  }
  return curve;
}

RectDiagram diagram_from_curve(const LegendrianCurve& c) {
  if (c.shift != 0) throw Error("diagram_from_curve: curve has been shifted off the construction frame");
  struct H {
    double z;
    double theta_start, theta_end;
    std::size_t tail_v, head_v;
  };
  std::vector<H> hs;
  std::vector<double> v_angle;
  for (const auto& loop : c.loops) {
    const std::size_t v_base = v_angle.size();
    std::size_t h_in_loop = 0;
    for (const auto& p : loop.pieces) {
      if (p.tag == SegmentTag::NearVertical) {
        const auto& end = loop.samples[p.first_sample + p.segment_count];
        double a = std::fmod(end.theta, kTwoPi);
        if (a < 0) a += kTwoPi;
        v_angle.push_back(a);
      } else if (p.tag == SegmentTag::NearHorizontal) {
        const auto& s = loop.samples[p.first_sample];
        const auto& e = loop.samples[p.first_sample + p.segment_count];
        hs.push_back({s.z, s.theta, e.theta, 0, 0});
        ++h_in_loop;
      }
    }
    // Pieces alternate H, R, V, R: horizontal i is followed by vertical i and
    // preceded by vertical i - 1.
    for (std::size_t i = 0; i < h_in_loop; ++i) {
      auto& h = hs[hs.size() - h_in_loop + i];
      h.head_v = v_base + i;
      h.tail_v = v_base + (i + h_in_loop - 1) % h_in_loop;
    }
  }
  const auto n = hs.size();
  std::vector<std::size_t> v_order(n), h_order(n);
  for (std::size_t i = 0; i < n; ++i) v_order[i] = h_order[i] = i;
  std::sort(v_order.begin(), v_order.end(), [&](auto a, auto b) { return v_angle[a] < v_angle[b]; });
  std::sort(h_order.begin(), h_order.end(), [&](auto a, auto b) { return hs[a].z < hs[b].z; });
  std::vector<int> v_rank(n), h_rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    v_rank[v_order[i]] = static_cast<int>(i) + 1;
    h_rank[h_order[i]] = static_cast<int>(i) + 1;
  }
  std::vector<HorizArc> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& h = hs[i];
    rows.push_back({h_rank[i], v_rank[h.tail_v], v_rank[h.head_v],
                    h.theta_end > h.theta_start ? Sweep::Forward : Sweep::Backward});
  }
  return RectDiagram::from_rows(std::move(rows));
}

ContactReport contact_residual(const LegendrianCurve& c) {
  ContactReport rep;
  const double k = c.shift;
  for (const auto& loop : c.loops) {
    const std::size_t m = loop.samples.size();
    if (m < 2) throw Error("contact_residual: a loop needs at least 2 samples");
    for (std::size_t i = 0; i < m; ++i) {
      const auto& p = loop.samples[i];
      const auto& q = loop.samples[(i + 1) % m];
      const double dr = q.r - p.r;
      const double dth = wrap_delta(q.theta - p.theta);
      const double dz = q.z - p.z;
      double integral = 0;
      for (std::size_t g = 0; g < kGlNodes.size(); ++g) {
        const double t = 0.5 * (kGlNodes[g] + 1);
        const double r = p.r + t * dr;
        const double th = p.theta + t * dth;
        const double cs = std::cos(th), sn = std::sin(th);
        const double x = r * cs + k, y = r * sn + k;
        const double xd = dr * cs - r * sn * dth;
        const double yd = dr * sn + r * cs * dth;
        const double zd = dz + k * (xd - yd);
        integral += 0.5 * kGlWeights[g] * (zd + x * yd - y * xd);
      }
      const auto a = half_space_map(to_euclid(p), k);
      auto qq = q;
      qq.theta = p.theta + dth;
      const auto b = half_space_map(to_euclid(qq), k);
      const double len = std::sqrt((b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y) + (b.z - a.z) * (b.z - a.z));
      const double res = len > 0 ? std::abs(integral) / len : 0.0;
      const SegmentTag tag = loop.segment_tags.empty() ? SegmentTag::Radial : loop.segment_tags[i];
      rep.max_residual = std::max(rep.max_residual, res);
      auto& slot = rep.per_tag[tag];
      slot = std::max(slot, res);
      ++rep.segments;
    }
  }
  return rep;
}

LegendrianCurve half_space_shift(const LegendrianCurve& c, double k) {
  LegendrianCurve out = c;
  out.shift += k;
  return out;
}

double upper_half_shift(const LegendrianCurve& c) {
  double m = 0;
  for (const auto& loop : c.euclid_points()) {
    for (const auto& p : loop) m = std::max(m, std::abs(p.x) + std::abs(p.y));
  }
  return 1 + m;
}

// ---------------------------------------------------------------- fronts

std::size_t FrontPolyline::cusp_count() const {
  std::size_t c = 0;
  for (const auto& loop : loops) {
    for (const auto& v : loop) c += v.kind != CornerKind::Smooth;
  }
  return c;
}

FrontPolyline front_from_diagram(const RectDiagram& d) {
  require_valid(d);
  for (const auto& h : d.rows()) {
    const bool wraps = h.forward() ? h.head_col < h.tail_col : h.head_col > h.tail_col;
    if (wraps) {
      throw Error("front: row " + std::to_string(h.z_rank) +
                  " crosses theta = 0; apply rotate_theta (rdg move rot:<k>) first");
    }
  }
  const int n = d.size();
  std::vector<int> row_with_tail(static_cast<std::size_t>(n) + 1);
  for (const auto& h : d.rows()) row_with_tail[static_cast<std::size_t>(h.tail_col)] = h.z_rank;
  FrontPolyline f;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    auto& loop = f.loops.emplace_back();
    for (int z = start; !seen[static_cast<std::size_t>(z)];) {
      seen[static_cast<std::size_t>(z)] = true;
      const auto& h = d.row(z);
      for (const Corner c : {Corner{z, h.tail_col, false}, Corner{z, h.head_col, true}}) {
        loop.push_back({static_cast<double>(c.col - z), static_cast<double>(c.col + z), classify_corner(d, c)});
      }
      z = row_with_tail[static_cast<std::size_t>(h.head_col)];
    }
  }
  return f;
}

RectDiagram diagram_from_front(const FrontPolyline& f) {
  constexpr double eps = 1e-9;
  struct Seg {
    double y, x_from, x_to;
  };
  std::vector<Seg> horiz;
  std::vector<double> vert_x;
  // (loop, vertex) -> (horizontal index, at_head)
  struct VertexRef {
    std::size_t h;
    bool at_head;
    CornerKind kind;
  };
  std::vector<VertexRef> refs;
  for (const auto& loop : f.loops) {
    const std::size_t m = loop.size();
    if (m < 4 || m % 2 != 0) throw Error("front: each loop needs an even number (>= 4) of vertices");
    auto X = [&](std::size_t i) { return (loop[i % m].x + loop[i % m].z) / 2; };
    auto Y = [&](std::size_t i) { return (loop[i % m].z - loop[i % m].x) / 2; };
    auto is_h = [&](std::size_t i) {
      if (std::abs(Y(i) - Y(i + 1)) < eps && std::abs(X(i) - X(i + 1)) > eps) return true;
      if (std::abs(X(i) - X(i + 1)) < eps && std::abs(Y(i) - Y(i + 1)) > eps) return false;
      throw Error("front: segment " + std::to_string(i) + " has slope other than +1 or -1");
    };
    const std::size_t offset = is_h(0) ? 0 : 1;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t i = s + offset;
      const bool h = is_h(i);
      if (h != (s % 2 == 0)) throw Error("front: slopes must alternate between +1 and -1");
      if (h) {
        refs.push_back({horiz.size(), false, loop[i % m].kind});
        refs.push_back({horiz.size(), true, loop[(i + 1) % m].kind});
        horiz.push_back({Y(i), X(i), X(i + 1)});
      } else {
        vert_x.push_back(X(i));
      }
    }
  }
  auto rank_of = [eps](std::vector<double> vals) {
    std::sort(vals.begin(), vals.end());
    return [vals, eps](double v) {
      auto it = std::lower_bound(vals.begin(), vals.end(), v - eps);
      return static_cast<int>(it - vals.begin()) + 1;
    };
  };
  std::vector<double> ys;
  for (const auto& h : horiz) ys.push_back(h.y);
  const auto col_rank = rank_of(vert_x);
  const auto row_rank = rank_of(ys);
  std::vector<HorizArc> rows;
  for (const auto& h : horiz) {
    rows.push_back({row_rank(h.y), col_rank(h.x_from), col_rank(h.x_to),
                    h.x_to > h.x_from ? Sweep::Forward : Sweep::Backward});
  }
  auto d = RectDiagram::from_rows(rows);
  for (const auto& r : refs) {
    const auto& h = rows[r.h];
    const Corner c{h.z_rank, r.at_head ? h.head_col : h.tail_col, r.at_head};
    if (classify_corner(d, c) != r.kind) {
      throw Error("front: cusp marking at (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                  ") disagrees with the geometry");
    }
  }
  return d;
}

std::string front_to_svg(const FrontPolyline& f) {
  double xmin = 0, xmax = 0, zmin = 0, zmax = 0;
  bool first = true;
  for (const auto& loop : f.loops) {
    for (const auto& v : loop) {
      if (first) {
        xmin = xmax = v.x;
        zmin = zmax = v.z;
        first = false;
      }
      xmin = std::min(xmin, v.x);
      xmax = std::max(xmax, v.x);
      zmin = std::min(zmin, v.z);
      zmax = std::max(zmax, v.z);
    }
  }
  const double scale = 40, pad = 20;
  const double w = (xmax - xmin) * scale + 2 * pad;
  const double hgt = (zmax - zmin) * scale + 2 * pad;
  auto px = [&](double x) { return fmt((x - xmin) * scale + pad, 6); };
  auto pz = [&](double z) { return fmt((zmax - z) * scale + pad, 6); };
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w, 6) << "\" height=\""
      << fmt(hgt, 6) << "\">\n";
  for (const auto& loop : f.loops) {
    out << "  <polygon class=\"front\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < loop.size(); ++i) {
      out << (i ? " " : "") << px(loop[i].x) << ',' << pz(loop[i].z);
    }
    out << "\"/>\n";
    for (const auto& v : loop) {
      if (v.kind == CornerKind::Smooth) continue;
      out << "  <circle class=\"" << (v.kind == CornerKind::UpCusp ? "cusp-up" : "cusp-down") << "\" cx=\""
          << px(v.x) << "\" cy=\"" << pz(v.z) << "\" r=\"4\" fill=\"red\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string curve_to_csv(const LegendrianCurve& c) {
  std::string out = "r,theta,z,tag\n";
  const auto pts = c.points();
  for (std::size_t l = 0; l < pts.size(); ++l) {
    const auto& loop = c.loops[l];
    for (std::size_t i = 0; i < pts[l].size(); ++i) {
      const auto& p = pts[l][i];
      out += fmt(p.r) + ',' + fmt(p.theta) + ',' + fmt(p.z) + ',' + to_string(loop.segment_tags[i]) + '\n';
    }
  }
  return out;
}

}  // namespace rdg
