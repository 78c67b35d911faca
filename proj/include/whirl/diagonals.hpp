#pragma once

#include "whirl/spiral.hpp"

namespace whirl {

// Outermost vertices of the first four squares.  A is the upper-left corner
// of square 0, B the upper-right of square 1, C the lower-right of square 2,
// D the lower-left of square 3, and E the lower-right corner of square 0.
// The segments A-C and B-D are the spiral's guiding diagonals: they are
// perpendicular, their length ratio is m, and they cross at the pole.
struct ExtremeVertices {
  Point a, b, c, d, e;
};

ExtremeVertices extreme_vertices(const SpiralSpec& spec);

// Direction vectors d1 along A-C and d2 along B-D.
std::pair<Vec2, Vec2> diagonal_vectors(const SpiralSpec& spec);

// Intersection of lines (A,C) and (B,D).  Throws Error(degenerate_lines) if
// the lines are parallel, which cannot happen for a valid spec.
Point diagonal_intersection(const SpiralSpec& spec);

struct DiagonalReport {
  Point a, b, c, d, e;
  Vec2 d1, d2;
  double orthogonality_residual = 0.0;  // |d1.d2| / (|d1| |d2|)
  Point intersection;
  double pole_distance = 0.0;  // distance from the intersection to the pole
  double length_ratio = 0.0;   // |d1| / |d2|
  double slope_d1 = 0.0;       // slope of line (A,C), equals -1/m
  double slope_d2 = 0.0;       // slope of line (B,D), equals m
};

DiagonalReport compute_report(const SpiralSpec& spec);

}  // namespace whirl
