#include "whirl/diagonals.hpp"

#include <cmath>

namespace whirl {

namespace {

double slope(Point p, Point q) {
  const double dx = q.x - p.x;
  if (dx == 0.0) throw Error(errc::degenerate_lines, "vertical segment has no slope");
  return (q.y - p.y) / dx;
}

}  // namespace

ExtremeVertices extreme_vertices(const SpiralSpec& spec) {
  const double L = spec.L;
  const double m = spec.m;
  const Point e = spec.lower_right();
  ExtremeVertices v;
  v.e = e;
  v.a = e + Vec2{-L, L};
  v.b = e + Vec2{L / m, L};
  v.c = e + Vec2{L / m, L - L / m - L / (m * m)};
  v.d = e + Vec2{L / m - L / (m * m) - L / (m * m * m), L - L / m - L / (m * m)};
  return v;
}

std::pair<Vec2, Vec2> diagonal_vectors(const SpiralSpec& spec) {
  const double L = spec.L;
  const double m = spec.m;
  const Vec2 d1{-L - L / m, L / m + L / (m * m)};
  const Vec2 d2{L / (m * m) + L / (m * m * m), L / m + L / (m * m)};
  return {d1, d2};
}

Point diagonal_intersection(const SpiralSpec& spec) {
  const ExtremeVertices v = extreme_vertices(spec);
  const Vec2 r = v.c - v.a;
  const Vec2 s = v.d - v.b;
  const double det = r.x * s.y - r.y * s.x;
  if (std::abs(det) < 1e-300)
    throw Error(errc::degenerate_lines, "diagonals are parallel");
  const Vec2 ab = v.b - v.a;
  const double t = (ab.x * s.y - ab.y * s.x) / det;
  return v.a + t * r;
}

DiagonalReport compute_report(const SpiralSpec& spec) {
  const ExtremeVertices v = extreme_vertices(spec);
  const auto [d1, d2] = diagonal_vectors(spec);
  DiagonalReport rep;
  rep.a = v.a;
  rep.b = v.b;
  rep.c = v.c;
  rep.d = v.d;
  rep.e = v.e;
  rep.d1 = d1;
  rep.d2 = d2;
  rep.orthogonality_residual = std::abs(dot(d1, d2)) / (norm(d1) * norm(d2));
  rep.intersection = diagonal_intersection(spec);
  const Pole pole = pole_closed(spec);
  rep.pole_distance = distance(rep.intersection, pole.point);
  rep.length_ratio = norm(d1) / norm(d2);
  rep.slope_d1 = slope(v.a, v.c);
  rep.slope_d2 = slope(v.b, v.d);

  // The pole's offsets from E along the two diagonal directions must be
  // perpendicular as well; a failure here is an implementation bug.
  const double m = spec.m;
  const double a = (m - 1.0) / (m * m + 1.0);
  const Vec2 v_eye = pole.point - v.e;
  const Vec2 u_eye{-spec.L * m * a, spec.L * a};
  if (std::abs(dot(v_eye, u_eye)) > 1e-12 * norm(v_eye) * norm(u_eye))
    throw std::logic_error("pole offset vectors lost orthogonality");
  return rep;
}

}  // namespace whirl
