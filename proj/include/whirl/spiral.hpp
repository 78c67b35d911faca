#pragma once

#include <array>
#include <vector>

#include "whirl/errors.hpp"
#include "whirl/geometry.hpp"

namespace whirl {

// A whirling-square spiral: square 0 has side L and center center0, and every
// following square is shrunk by 1/m and attached clockwise (right, below,
// left, above, ...) flush against the previous one.  m > 1 strictly.
struct SpiralSpec {
  double m = 0.0;        // shrink ratio per square
  double L = 0.0;        // side of the first square
  Point center0;         // center of the first square

  Point upper_right() const { return {center0.x + L / 2.0, center0.y + L / 2.0}; }
  Point lower_right() const { return {center0.x + L / 2.0, center0.y - L / 2.0}; }
};

// Validating constructor.  Throws Error(ratio_out_of_range) unless m > 1 and
// finite, Error(bad_side) unless L > 0 and finite, std::invalid_argument if
// the center is not finite.
SpiralSpec make_spec(double m, double L, Point center0);

struct Square {
  int index = 0;
  Point center;
  double side = 0.0;
  int state = 0;  // placement state 1..4 that produced this square; 4 for square 0
};

enum class PoleMethod { closed_form, iterative };

struct Pole {
  Point point;
  PoleMethod method = PoleMethod::closed_form;
  double residual = 0.0;   // step displacement between the last two iterates, in units of L
  int iterations = 0;      // 0 for the closed form
};

inline constexpr int kSquareCap = 64;
inline constexpr int kPoleIterationCap = 1000000;
inline constexpr double kDefaultTol = 1e-12;

// Center of square i in closed form.  Exact at i = 0 by construction.
Point square_center_closed(const SpiralSpec& spec, int i);

// Center of square i by running the placement automaton i steps.
Point square_center_recursive(const SpiralSpec& spec, int i);

// Limit point of the square centers.  Computed from the upper-right vertex of
// square 0; the equivalent lower-right-vertex form is exposed below and the
// two are cross-checked internally.
Pole pole_closed(const SpiralSpec& spec);

// Same point expressed from the lower-right vertex of square 0.
Point pole_closed_via_lower_right(const SpiralSpec& spec);

// Runs the placement automaton until the center moves less than tol*L per
// step.  Requires 0 < tol < 1.  Throws MaxIterationsError (with the best
// estimate attached) if max_iterations steps do not reach the tolerance.
Pole pole_iterative(const SpiralSpec& spec, double tol = kDefaultTol,
                    int max_iterations = kPoleIterationCap);

class MaxIterationsError : public Error {
 public:
  MaxIterationsError(const std::string& what, Pole best)
      : Error(errc::max_iterations, what), best_estimate(best) {}
  Pole best_estimate;
};

// First n squares, clockwise.  1 <= n <= cap.
std::vector<Square> whirl_squares(const SpiralSpec& spec, int n, int cap = kSquareCap);

// Corners counterclockwise starting at the upper-right.
std::array<Point, 4> square_vertices(const Square& sq);

struct Circle {
  Point center;
  double radius = 0.0;
};

// Circle through the corners of square i; its radius is L/(sqrt(2)*m^i) and
// the pole lies on it.
Circle circumscribed_circle(const SpiralSpec& spec, int i);

// pole - center_i evaluated without forming the two nearby points first, so
// the result keeps full relative precision even when m^i is enormous.
Vec2 pole_offset(const SpiralSpec& spec, int i);

// Quarter-circle arc inscribed in square i.  The arc's center sits at the
// corner of square i that faces the next square, its radius is the side of
// square i, and it sweeps clockwise through the square from one corner to the
// diagonally opposite one.  Consecutive arcs share endpoints, so the chain is
// a continuous spiral.  Angles are in the standard frame (y up); start_angle
// cycles through pi, pi/2, 0, -pi/2 and end_angle = start_angle - pi/2.
struct QuarterArc {
  int index = 0;
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  Point start;
  Point end;
};

std::vector<QuarterArc> spiral_arcs(const SpiralSpec& spec, int n_squares, int cap = kSquareCap);

// Polyline along the arc chain with samples_per_arc points per arc
// (samples_per_arc >= 2); shared endpoints are emitted once, so the result
// has n_squares*(samples_per_arc-1)+1 points.
std::vector<Point> arc_polyline(const SpiralSpec& spec, int n_squares, int samples_per_arc,
                                int cap = kSquareCap);

}  // namespace whirl
