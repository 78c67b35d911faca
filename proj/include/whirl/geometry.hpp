#pragma once

#include <cmath>

namespace whirl {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// quarter turn counterclockwise
inline Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace whirl
