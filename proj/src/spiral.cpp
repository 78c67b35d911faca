#include "whirl/spiral.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace whirl {

namespace {

constexpr double kPi = std::numbers::pi;

// One placement step.  With the current square's side and center, state
// 1/2/3/4 puts the next square right/below/left/above, flush and shrunk by m.
void place_step(int state, double side, double m, double& x, double& y) {
  const double s = side / 2.0;
  const double t = side / (2.0 * m);
  switch (state) {
    case 1: x += s + t; y += s - t; break;
    case 2: x += s - t; y += -s - t; break;
    case 3: x += -s - t; y += -s + t; break;
    case 4: x += -s + t; y += s + t; break;
  }
}

void check_index(int i) {
  if (i < 0) throw std::invalid_argument("square index must be >= 0");
}

// Shared pieces of the closed form.
struct ClosedTerms {
  double a;   // (m-1)/(m^2+1)
  double b;   // (m+1)/(m^2+1)
  double k1;
  double k2;
  double k1p;     // 1 - k1, kept in product form
  double parity;  // (-1)^i
};

ClosedTerms closed_terms(double m, int i) {
  ClosedTerms t{};
  const double q = m * m + 1.0;
  t.a = (m - 1.0) / q;
  t.b = (m + 1.0) / q;
  const int j = i / 2;
  const double sj = (j % 2 == 0) ? 1.0 : -1.0;
  t.k1p = sj * std::pow(m, -2.0 * j);
  t.k1 = 1.0 - t.k1p;
  t.k2 = sj * 0.5 * std::pow(m, -static_cast<double>(i));
  t.parity = (i % 2 == 0) ? 1.0 : -1.0;
  return t;
}

}  // namespace

SpiralSpec make_spec(double m, double L, Point center0) {
  if (!(m > 1.0) || !std::isfinite(m))
    throw Error(errc::ratio_out_of_range, "ratio m must be finite and > 1, got " + std::to_string(m));
  if (!(L > 0.0) || !std::isfinite(L))
    throw Error(errc::bad_side, "side L must be finite and > 0, got " + std::to_string(L));
  if (!finite(center0)) throw std::invalid_argument("center0 must be finite");
  return SpiralSpec{m, L, center0};
}

Point square_center_closed(const SpiralSpec& spec, int i) {
  check_index(i);
  const ClosedTerms t = closed_terms(spec.m, i);
  // Offsets are taken from center0 rather than the upper-right vertex so that
  // i = 0 collapses to exactly (0.5 - 0.5) = 0 in both coordinates.
  const double ox = 0.5 + (t.k1 * t.a - t.parity * t.k2);
  const double oy = 0.5 - (t.k1 * t.b + t.k2);
  return {spec.center0.x + spec.L * ox, spec.center0.y + spec.L * oy};
}

Point square_center_recursive(const SpiralSpec& spec, int i) {
  check_index(i);
  double x = spec.center0.x;
  double y = spec.center0.y;
  double side = spec.L;
  for (int k = 0; k < i; ++k) {
    place_step(k % 4 + 1, side, spec.m, x, y);
    side /= spec.m;
  }
  return {x, y};
}

Point pole_closed_via_lower_right(const SpiralSpec& spec) {
  const double m = spec.m;
  const double q = m * m + 1.0;
  const Point lr = spec.lower_right();
  return {lr.x + spec.L * (m - 1.0) / q, lr.y + spec.L * m * (m - 1.0) / q};
}

Pole pole_closed(const SpiralSpec& spec) {
  const double m = spec.m;
  const double q = m * m + 1.0;
  const Point ur = spec.upper_right();
  const Point eye{ur.x + spec.L * (m - 1.0) / q, ur.y - spec.L * (m + 1.0) / q};
  const Point alt = pole_closed_via_lower_right(spec);
  const double scale = spec.L + std::abs(eye.x) + std::abs(eye.y);
  if (distance(eye, alt) > 1e-14 * scale)
    throw std::logic_error("pole closed forms disagree");
  return Pole{eye, PoleMethod::closed_form, 0.0, 0};
}

Pole pole_iterative(const SpiralSpec& spec, double tol, int max_iterations) {
  if (!(tol > 0.0) || !(tol < 1.0) || !std::isfinite(tol))
    throw Error(errc::tolerance_out_of_range, "tolerance must lie in (0, 1), got " + std::to_string(tol));
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  double x = spec.center0.x;
  double y = spec.center0.y;
  double side = spec.L;
  double step = 0.0;
  const double stop = tol * spec.L;
  for (int n = 0; n < max_iterations; ++n) {
    const double px = x;
    const double py = y;
    place_step(n % 4 + 1, side, spec.m, x, y);
    side /= spec.m;
    step = std::hypot(x - px, y - py);
    if (step < stop)
      return Pole{{x, y}, PoleMethod::iterative, step / spec.L, n + 1};
  }
  Pole best{{x, y}, PoleMethod::iterative, step / spec.L, max_iterations};
  throw MaxIterationsError("pole iteration did not reach tolerance " + std::to_string(tol) +
                               " within " + std::to_string(max_iterations) + " steps",
                           best);
}

std::vector<Square> whirl_squares(const SpiralSpec& spec, int n, int cap) {
  if (n < 1) throw std::invalid_argument("need at least one square");
  if (n > cap)
    throw Error(errc::cap_exceeded, "requested " + std::to_string(n) + " squares, cap is " +
                                        std::to_string(cap));
  std::vector<Square> out;
  out.reserve(n);
  double x = spec.center0.x;
  double y = spec.center0.y;
  double side = spec.L;
  out.push_back(Square{0, {x, y}, side, 4});
  for (int i = 1; i < n; ++i) {
    const int state = (i - 1) % 4 + 1;
    place_step(state, side, spec.m, x, y);
    side /= spec.m;
    out.push_back(Square{i, {x, y}, side, state});
  }
  return out;
}

std::array<Point, 4> square_vertices(const Square& sq) {
  const double h = sq.side / 2.0;
  const double cx = sq.center.x;
  const double cy = sq.center.y;
  return {Point{cx + h, cy + h}, Point{cx - h, cy + h}, Point{cx - h, cy - h},
          Point{cx + h, cy - h}};
}

Circle circumscribed_circle(const SpiralSpec& spec, int i) {
  check_index(i);
  const double radius = spec.L / (std::sqrt(2.0) * std::pow(spec.m, static_cast<double>(i)));
  return Circle{square_center_closed(spec, i), radius};
}

Vec2 pole_offset(const SpiralSpec& spec, int i) {
  check_index(i);
  const ClosedTerms t = closed_terms(spec.m, i);
  // pole - center_i = L*(a*(1-k1) + (-1)^i k2, -b*(1-k1) + k2); evaluating
  // with 1-k1 in product form avoids the cancellation that forming the two
  // points and subtracting would suffer once m^i is large.
  const double dx = spec.L * (t.a * t.k1p + t.parity * t.k2);
  const double dy = spec.L * (-t.b * t.k1p + t.k2);
  return {dx, dy};
}

namespace {

// Corner of square i (as an offset direction from its center) that the arc
// is centered on, and the arc's start direction.  Both cycle with period 4.
constexpr std::array<Vec2, 4> kArcCornerDir = {Vec2{1.0, -1.0}, Vec2{-1.0, -1.0},
                                               Vec2{-1.0, 1.0}, Vec2{1.0, 1.0}};
constexpr std::array<Vec2, 4> kArcStartDir = {Vec2{-1.0, 0.0}, Vec2{0.0, 1.0}, Vec2{1.0, 0.0},
                                              Vec2{0.0, -1.0}};
constexpr std::array<double, 4> kArcStartAngle = {kPi, kPi / 2.0, 0.0, -kPi / 2.0};

}  // namespace

std::vector<QuarterArc> spiral_arcs(const SpiralSpec& spec, int n_squares, int cap) {
  const std::vector<Square> squares = whirl_squares(spec, n_squares, cap);
  std::vector<QuarterArc> arcs;
  arcs.reserve(squares.size());
  for (const Square& sq : squares) {
    const int k = sq.index % 4;
    QuarterArc arc;
    arc.index = sq.index;
    arc.radius = sq.side;
    arc.center = sq.center + (sq.side / 2.0) * kArcCornerDir[k];
    arc.start_angle = kArcStartAngle[k];
    arc.end_angle = arc.start_angle - kPi / 2.0;
    arc.start = arc.center + sq.side * kArcStartDir[k];
    arc.end = arc.center + sq.side * kArcStartDir[(k + 1) % 4];
    arcs.push_back(arc);
  }
  return arcs;
}

std::vector<Point> arc_polyline(const SpiralSpec& spec, int n_squares, int samples_per_arc,
                                int cap) {
  if (samples_per_arc < 2) throw std::invalid_argument("need at least two samples per arc");
  const std::vector<QuarterArc> arcs = spiral_arcs(spec, n_squares, cap);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n_squares) * (samples_per_arc - 1) + 1);
  for (const QuarterArc& arc : arcs) {
    const int first = arc.index == 0 ? 0 : 1;  // shared endpoint already emitted
    for (int k = first; k < samples_per_arc; ++k) {
      if (k == 0) {
        pts.push_back(arc.start);
      } else if (k == samples_per_arc - 1) {
        pts.push_back(arc.end);
      } else {
        const double th =
            arc.start_angle - (kPi / 2.0) * (static_cast<double>(k) / (samples_per_arc - 1));
        pts.push_back(arc.center + arc.radius * Vec2{std::cos(th), std::sin(th)});
      }
    }
  }
  return pts;
}

}  // namespace whirl
