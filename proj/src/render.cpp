#include "whirl/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "whirl/diagonals.hpp"
#include "whirl/numfmt.hpp"

namespace whirl {

namespace {

bool wants(const RenderOptions& opts, Layer layer) {
  return std::find(opts.layers.begin(), opts.layers.end(), layer) != opts.layers.end();
}

std::string scaled_dash(const std::string& pattern, double L) {
  if (pattern.empty()) return {};
  std::string out;
  std::stringstream ss(pattern);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!out.empty()) out += ',';
    out += fmt_shortest(std::stod(tok) * L);
  }
  return out;
}

void open_group(std::string& svg, const char* id, const StrokeStyle& style, double L) {
  svg += "  <g id=\"";
  svg += id;
  svg += "\" fill=\"none\" stroke=\"" + style.color + "\" stroke-width=\"" +
         fmt_shortest(style.width * L) + "\"";
  const std::string dash = scaled_dash(style.dash, L);
  if (!dash.empty()) svg += " stroke-dasharray=\"" + dash + "\"";
  svg += ">\n";
}

void emit_line(std::string& svg, Point a, Point b) {
  svg += "    <line x1=\"" + fmt_shortest(a.x) + "\" y1=\"" + fmt_shortest(a.y) + "\" x2=\"" +
         fmt_shortest(b.x) + "\" y2=\"" + fmt_shortest(b.y) + "\"/>\n";
}

void emit_circle(std::string& svg, Point c, double r) {
  svg += "    <circle cx=\"" + fmt_shortest(c.x) + "\" cy=\"" + fmt_shortest(c.y) + "\" r=\"" +
         fmt_shortest(r) + "\"/>\n";
}

}  // namespace

std::string render_svg(const SpiralSpec& spec, int n_squares, const RenderOptions& opts) {
  if (opts.width_px < 64 || opts.height_px < 64)
    throw std::invalid_argument("viewport must be at least 64px on each side");
  if (!(opts.margin_fraction >= 0.0) || !(opts.margin_fraction <= 0.45))
    throw std::invalid_argument("margin_fraction must lie in [0, 0.45]");

  const double L = spec.L;
  const std::vector<Square> squares = whirl_squares(spec, n_squares);
  const double pad = opts.margin_fraction * L;
  const double x_min = spec.center0.x - L / 2.0 - pad;
  const double y_min = spec.center0.y - L / 2.0 - pad;
  const double extent = L + 2.0 * pad;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opts.width_px) +
         "\" height=\"" + std::to_string(opts.height_px) + "\" viewBox=\"" +
         fmt_shortest(x_min) + " " + fmt_shortest(-(y_min + extent)) + " " +
         fmt_shortest(extent) + " " + fmt_shortest(extent) + "\">\n";
  // the one and only y flip; everything below is in the kernel frame
  svg += " <g transform=\"scale(1,-1)\">\n";

  if (wants(opts, Layer::squares)) {
    open_group(svg, "squares", opts.squares, L);
    for (const Square& sq : squares) {
      const double h = sq.side / 2.0;
      svg += "    <rect x=\"" + fmt_shortest(sq.center.x - h) + "\" y=\"" +
             fmt_shortest(sq.center.y - h) + "\" width=\"" + fmt_shortest(sq.side) +
             "\" height=\"" + fmt_shortest(sq.side) + "\"/>\n";
    }
    svg += "  </g>\n";
  }

  if (wants(opts, Layer::circumcircles)) {
    open_group(svg, "circumcircles", opts.circumcircles, L);
    for (const Square& sq : squares) {
      const Circle c = circumscribed_circle(spec, sq.index);
      emit_circle(svg, c.center, c.radius);
    }
    svg += "  </g>\n";
  }

  if (wants(opts, Layer::diagonals)) {
    open_group(svg, "diagonals", opts.diagonals, L);
    const ExtremeVertices v = extreme_vertices(spec);
    emit_line(svg, v.a, v.c);
    emit_line(svg, v.b, v.d);
    svg += "  </g>\n";
  }

  if (wants(opts, Layer::arcs)) {
    open_group(svg, "arcs", opts.arcs, L);
    if (opts.arcs_as_polyline) {
      const std::vector<Point> pts = arc_polyline(spec, n_squares, opts.samples_per_arc);
      svg += "    <polyline points=\"";
      for (size_t i = 0; i < pts.size(); ++i) {
        if (i) svg += ' ';
        svg += fmt_shortest(pts[i].x) + "," + fmt_shortest(pts[i].y);
      }
      svg += "\"/>\n";
    } else {
      const std::vector<QuarterArc> arcs = spiral_arcs(spec, n_squares);
      svg += "    <path d=\"M " + fmt_shortest(arcs.front().start.x) + " " +
             fmt_shortest(arcs.front().start.y);
      for (const QuarterArc& arc : arcs) {
        svg += " A " + fmt_shortest(arc.radius) + " " + fmt_shortest(arc.radius) + " 0 0 0 " +
               fmt_shortest(arc.end.x) + " " + fmt_shortest(arc.end.y);
      }
      svg += "\"/>\n";
    }
    svg += "  </g>\n";
  }

  const bool wants_pole = wants(opts, Layer::pole);
  const bool wants_pole_circle = wants(opts, Layer::pole_circle);
  if (wants_pole || wants_pole_circle) {
    const Pole pole = pole_closed(spec);
    const double ring = L / std::sqrt(2.0);
    if (std::abs(distance(pole.point, spec.center0) - ring) > 1e-9 * L)
      throw std::logic_error("pole left the common circle; refusing to draw");
    if (wants_pole_circle) {
      open_group(svg, "pole_circle", opts.pole_circle, L);
      emit_circle(svg, spec.center0, ring);
      svg += "  </g>\n";
    }
    if (wants_pole) {
      svg += "  <g id=\"pole\" fill=\"" + opts.pole_color + "\" stroke=\"none\">\n";
      emit_circle(svg, pole.point, opts.pole_marker_radius * L);
      svg += "  </g>\n";
    }
  }

  svg += " </g>\n</svg>\n";
  return svg;
}

std::string emit_centers_csv(const SpiralSpec& spec, int max_i) {
  if (max_i < 0) throw std::invalid_argument("max_i must be >= 0");
  if (max_i > kSquareCap)
    throw Error(errc::cap_exceeded, "max_i " + std::to_string(max_i) + " exceeds cap " +
                                        std::to_string(kSquareCap));
  std::string csv = "i,x,y,side\n";
  for (int i = 0; i <= max_i; ++i) {
    const Point c = square_center_closed(spec, i);
    const double side = spec.L / std::pow(spec.m, static_cast<double>(i));
    csv += std::to_string(i) + "," + fmt_g17(c.x) + "," + fmt_g17(c.y) + "," + fmt_g17(side) + "\n";
  }
  return csv;
}

}  // namespace whirl
