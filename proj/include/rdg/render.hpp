#pragma once

// Static pictures of a diagram on the cylinder, cut open along theta = 0.
// Vertical arcs pass over horizontal ones, so horizontal strokes are broken
// where a vertical crosses them.

#include <string>

#include "rdg/diagram.hpp"

namespace rdg {

struct RenderOptions {
  double cell = 40;    // px between adjacent columns / rows
  double margin = 30;  // px around the grid
  double gap = 6;      // half-width of the break in an under-strand
  bool labels = true;  // rank labels along the edges
};

/// SVG 1.1. Horizontal arcs are `<path class="horizontal">` (one per row,
/// possibly with several subpaths), vertical arcs `<line class="vertical">`,
/// and arcs crossing the cut get a `<path class="wrap-marker">` at each edge.
std::string render_svg(const RectDiagram& d, const RenderOptions& opt = {});

/// Character grid, top row = highest z rank. '+' corners, '-' horizontal,
/// '|' vertical (also at crossings), '~' where a row wraps across the cut.
std::string render_ascii(const RectDiagram& d);

}  // namespace rdg
