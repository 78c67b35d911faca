#pragma once

#include <string>
#include <vector>

#include "whirl/spiral.hpp"

namespace whirl {

enum class Layer {
  squares,
  arcs,
  diagonals,
  circumcircles,
  pole,
  pole_circle,
};

struct StrokeStyle {
  std::string color;
  double width = 0.006;        // in units of L
  std::string dash;            // dash pattern in units of L, e.g. "0.03,0.02"; empty = solid
};

struct RenderOptions {
  int width_px = 800;
  int height_px = 800;
  double margin_fraction = 0.1;  // padding around square 0, as a fraction of L
  std::vector<Layer> layers = {Layer::squares, Layer::arcs, Layer::pole};
  bool arcs_as_polyline = false;  // debug: sampled polyline instead of arc paths
  int samples_per_arc = 24;       // used only in polyline mode

  StrokeStyle squares{"#888888", 0.004, ""};
  StrokeStyle arcs{"#1f5fbf", 0.008, ""};
  StrokeStyle diagonals{"#b03030", 0.005, "0.03,0.02"};
  StrokeStyle circumcircles{"#3c9d50", 0.003, ""};
  StrokeStyle pole_circle{"#9148ad", 0.004, "0.015,0.015"};
  std::string pole_color = "#d02020";
  double pole_marker_radius = 0.012;  // in units of L
};

// Deterministic standalone SVG of the first n_squares squares and their
// spiral.  The drawing frame is the kernel frame (y up); the single y flip
// happens in the document transform, so every coordinate in the output is a
// kernel coordinate verbatim.  One <g> per requested layer, id'd by layer
// name.  Byte-identical for identical inputs.
std::string render_svg(const SpiralSpec& spec, int n_squares, const RenderOptions& opts = {});

// "i,x,y,side" rows for squares 0..max_i from the closed-form centers, 17
// significant digits.  Requires 0 <= max_i <= kSquareCap.
std::string emit_centers_csv(const SpiralSpec& spec, int max_i);

}  // namespace whirl
