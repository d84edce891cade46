#pragma once

// Piecewise-Legendrian realization of rectangular diagrams in (R^3, xi_sym),
// xi_sym = ker(dz + r^2 dtheta) = ker(dz + x dy - y dx).
//
// Horizontal arcs become characteristic-foliation arcs on the cylinder r = r1
// (dz/dtheta = -r1^2), vertical arcs foliation arcs on r = r2, and every corner
// a radial segment at constant (theta, z).

#include <map>
#include <string>
#include <vector>

#include "rdg/diagram.hpp"
#include "rdg/invariants.hpp"

namespace rdg {

enum class SegmentTag { NearHorizontal, NearVertical, Radial };
std::string to_string(SegmentTag t);

struct CylPoint {
  double r = 0;
  double theta = 0;  // unwrapped along the loop
  double z = 0;
};

struct EuclidPoint {
  double x = 0;
  double y = 0;
  double z = 0;
};

EuclidPoint to_euclid(const CylPoint& p);

/// (x, y, z) -> (x + K, y + K, z + K (x - y)); preserves dz + x dy - y dx.
EuclidPoint half_space_map(const EuclidPoint& p, double k);

/// A maximal run of segments coming from one arc or corner connector.
struct Piece {
  SegmentTag tag = SegmentTag::Radial;
  std::size_t first_sample = 0;  // segment i joins sample i and i + 1 (mod size)
  std::size_t segment_count = 0;
};

struct CurveLoop {
  std::vector<CylPoint> samples;  // construction frame
  std::vector<SegmentTag> segment_tags;  // one per segment; the loop is closed
  std::vector<Piece> pieces;
};

/// One closed loop per link component. Samples are kept in the frame they were
/// built in; `shift` is the accumulated half-space map parameter (maps with
/// parameters K and L compose to K + L), and `points()` returns images.
struct LegendrianCurve {
  std::vector<CurveLoop> loops;
  double shift = 0;
  bool closed = true;

  std::vector<std::vector<CylPoint>> points() const;
  std::vector<std::vector<EuclidPoint>> euclid_points() const;
  std::size_t count(SegmentTag t) const;
};

struct EmbedOptions {
  double r1 = 0.1;
  double r2 = 10.0;
  int samples_per_arc = 64;
};

LegendrianCurve embed(const RectDiagram& d, const EmbedOptions& opt = {});

/// Reads corners back off an unshifted embedding.
RectDiagram diagram_from_curve(const LegendrianCurve& c);

struct ContactReport {
  double max_residual = 0;
  std::map<SegmentTag, double> per_tag;
  std::size_t segments = 0;
};

/// Per segment: |integral of (dz + x dy - y dx) along the segment| / chord
/// length, the path between samples being the image of the construction-frame
/// interpolation (linear in r, theta, z).
ContactReport contact_residual(const LegendrianCurve& c);

LegendrianCurve half_space_shift(const LegendrianCurve& c, double k);

/// 1 + max(|x| + |y|) over the samples: a shift that puts the curve in y > 0.
double upper_half_shift(const LegendrianCurve& c);

// ---------------------------------------------------------------- fronts

struct FrontVertex {
  double x = 0;
  double z = 0;
  CornerKind kind = CornerKind::Smooth;
};

/// Rectilinear front: consecutive vertices differ by a slope +1 segment
/// (horizontal arc) or a slope -1 segment (vertical arc).
struct FrontPolyline {
  std::vector<std::vector<FrontVertex>> loops;
  std::size_t cusp_count() const;
};

/// Requires that no horizontal arc crosses theta = 0 (between column n and 1).
FrontPolyline front_from_diagram(const RectDiagram& d);
RectDiagram diagram_from_front(const FrontPolyline& f);

std::string front_to_svg(const FrontPolyline& f);
std::string curve_to_csv(const LegendrianCurve& c);

}  // namespace rdg
