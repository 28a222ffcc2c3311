#ifndef IFD_GEOMETRY_HPP
#define IFD_GEOMETRY_HPP

#include <cmath>

namespace ifd {

// Point or vector in the Euclidean plane the curves live in.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2 &) const = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

// Point of the parameter space: x is arc length along the first curve, y arc
// length along the second.
struct ParamPoint {
  double x = 0.0;
  double y = 0.0;

  constexpr bool operator==(const ParamPoint &) const = default;
};

// Dominance order a <=_xy b.
constexpr bool leq_xy(ParamPoint a, ParamPoint b, double tol = 0.0) {
  return a.x <= b.x + tol && a.y <= b.y + tol;
}

inline double d1(ParamPoint a, ParamPoint b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

constexpr ParamPoint lerp(ParamPoint a, ParamPoint b, double t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

} // namespace ifd

#endif
