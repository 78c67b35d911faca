#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "whirl/fitting.hpp"
#include "whirl/render.hpp"
#include "whirl/spiral.hpp"

using namespace whirl;

namespace {

size_t count_of(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

// Minimal well-formedness scan: every opened tag is closed in order.  Our
// output never puts '<' or '>' inside attribute values, so plain scanning is
// enough.
bool tags_balance(const std::string& svg) {
  std::vector<std::string> stack;
  for (size_t i = svg.find('<'); i != std::string::npos; i = svg.find('<', i + 1)) {
    const size_t end = svg.find('>', i);
    if (end == std::string::npos) return false;
    std::string tag = svg.substr(i + 1, end - i - 1);
    if (tag.empty()) return false;
    if (tag.back() == '/') continue;  // self-closing
    if (tag[0] == '/') {
      tag.erase(0, 1);
      if (stack.empty() || stack.back() != tag) return false;
      stack.pop_back();
      continue;
    }
    size_t sp = 0;
    while (sp < tag.size() && !std::isspace(static_cast<unsigned char>(tag[sp]))) ++sp;
    stack.push_back(tag.substr(0, sp));
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("svg has one square per requested index and balanced tags") {
  const SpiralSpec spec = make_spec(2.0, 1.0, {0, 0});
  RenderOptions opts;
  opts.layers = {Layer::squares};
  const std::string svg = render_svg(spec, 8, opts);
  CHECK(count_of(svg, "<rect ") == 8);
  CHECK(count_of(svg, "<svg ") == 1);
  CHECK(tags_balance(svg));
}

TEST_CASE("rendering is byte-for-byte reproducible") {
  const SpiralSpec spec = make_spec(1.618033988749895, 1.0, {0, 0});
  RenderOptions opts;
  opts.layers = {Layer::squares, Layer::arcs, Layer::diagonals, Layer::circumcircles,
                 Layer::pole,    Layer::pole_circle};
  CHECK(render_svg(spec, 10, opts) == render_svg(spec, 10, opts));
}

TEST_CASE("kernel coordinates appear verbatim under a single y flip") {
  const SpiralSpec spec = make_spec(2.0, 1.0, {0, 0});
  RenderOptions opts;
  opts.margin_fraction = 0.1;
  const std::string svg = render_svg(spec, 8, opts);
  CHECK(count_of(svg, "transform=\"scale(1,-1)\"") == 1);
  CHECK(svg.find("viewBox=\"-0.6 -0.6 1.2 1.2\"") != std::string::npos);
  // the marker carries the computed pole coordinate untouched; its y is one
  // ulp shy of -0.1, and the shortest round-trip spelling keeps that visible
  CHECK(svg.find("<circle cx=\"0.7\" cy=\"-0.09999999999999998\"") != std::string::npos);
}

TEST_CASE("layers come out in canonical order regardless of the request") {
  const SpiralSpec spec = make_spec(2.0, 1.0, {0, 0});
  RenderOptions opts;
  opts.layers = {Layer::pole, Layer::arcs, Layer::squares};
  const std::string svg = render_svg(spec, 6, opts);
  const size_t at_squares = svg.find("id=\"squares\"");
  const size_t at_arcs = svg.find("id=\"arcs\"");
  const size_t at_pole = svg.find("id=\"pole\"");
  REQUIRE(at_squares != std::string::npos);
  REQUIRE(at_arcs != std::string::npos);
  REQUIRE(at_pole != std::string::npos);
  CHECK(at_squares < at_arcs);
  CHECK(at_arcs < at_pole);
  CHECK(svg.find("id=\"diagonals\"") == std::string::npos);
}

TEST_CASE("arc layer: native arc path by default, polyline on request") {
  const SpiralSpec spec = make_spec(1.618033988749895, 1.0, {0, 0});
  RenderOptions opts;
  opts.layers = {Layer::arcs};
  const std::string native = render_svg(spec, 8, opts);
  CHECK(native.find("<path d=\"M ") != std::string::npos);
  CHECK(count_of(native, " A ") == 8);
  CHECK(native.find("<polyline") == std::string::npos);

  opts.arcs_as_polyline = true;
  opts.samples_per_arc = 12;
  const std::string sampled = render_svg(spec, 8, opts);
  CHECK(sampled.find("<polyline points=\"") != std::string::npos);
  CHECK(sampled.find(" A ") == std::string::npos);
  // 8 arcs, 12 samples each, shared joints emitted once; one comma per point
  // plus the one in the scale(1,-1) transform
  CHECK(count_of(sampled, ",") == 8 * 11 + 1 + 1);
}

TEST_CASE("auxiliary layers carry their styling") {
  const SpiralSpec spec = make_spec(2.0, 1.0, {0, 0});
  RenderOptions opts;
  opts.layers = {Layer::diagonals, Layer::circumcircles, Layer::pole_circle};
  const std::string svg = render_svg(spec, 5, opts);
  CHECK(svg.find("stroke-dasharray=\"0.03,0.02\"") != std::string::npos);  // diagonals, L = 1
  CHECK(count_of(svg, "<line ") == 2);
  // five circumcircles plus the shared pole circle
  CHECK(count_of(svg, "<circle ") == 6);
  CHECK(svg.find("r=\"0.7071067811865475\"") != std::string::npos);  // L / sqrt(2)
}

TEST_CASE("stroke widths scale with L") {
  const SpiralSpec spec = make_spec(2.0, 10.0, {0, 0});
  RenderOptions opts;
  opts.layers = {Layer::squares};
  opts.squares.width = 0.004;
  const std::string svg = render_svg(spec, 3, opts);
  CHECK(svg.find("stroke-width=\"0.04\"") != std::string::npos);
}

TEST_CASE("render guards its arguments") {
  const SpiralSpec spec = make_spec(2.0, 1.0, {0, 0});
  RenderOptions opts;
  opts.width_px = 32;
  CHECK_THROWS_AS(render_svg(spec, 4, opts), std::invalid_argument);
  opts.width_px = 800;
  opts.margin_fraction = 0.5;
  CHECK_THROWS_AS(render_svg(spec, 4, opts), std::invalid_argument);
  opts.margin_fraction = 0.1;
  CHECK_THROWS_AS(render_svg(spec, 0, opts), std::invalid_argument);
  CHECK_THROWS_AS(render_svg(spec, kSquareCap + 1, opts), Error);
}

TEST_CASE("centers csv: exact first rows and full round trip") {
  const SpiralSpec spec = make_spec(2.0, 1.0, {0, 0});
  CHECK(emit_centers_csv(spec, 1) == "i,x,y,side\n0,0,0,1\n1,0.75,0.25,0.5\n");

  const SpiralSpec phi = make_spec(1.618033988749895, 1.0, {0, 0});
  const std::string csv = emit_centers_csv(phi, 30);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "i,x,y,side");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    int i = 0;
    double x = 0, y = 0, side = 0;
    REQUIRE(std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &i, &x, &y, &side) == 4);
    const Point want = square_center_closed(phi, i);
    // 17 significant digits survive the round trip unchanged
    CHECK(x == want.x);
    CHECK(y == want.y);
    CHECK(side == phi.L / std::pow(phi.m, i));
    ++rows;
  }
  CHECK(rows == 31);

  CHECK_THROWS_AS(emit_centers_csv(spec, -1), std::invalid_argument);
  CHECK_THROWS_AS(emit_centers_csv(spec, kSquareCap + 1), Error);
}
