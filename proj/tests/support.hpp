#ifndef IFD_TESTS_SUPPORT_HPP
#define IFD_TESTS_SUPPORT_HPP

#include "ifd/integrals.hpp"
#include "ifd/param_space.hpp"
#include "ifd/path.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <vector>

namespace ifd::test {

inline ParameterSpace space_of(std::vector<Vec2> a, std::vector<Vec2> b) {
  return ParameterSpace(PolygonalCurve(a), PolygonalCurve(b));
}

// The recurring single-cell instances.
inline ParameterSpace parallel_unit() { return space_of({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}); }
inline ParameterSpace perpendicular_unit() {
  return space_of({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}});
}
inline ParameterSpace antiparallel_unit() {
  return space_of({{0, 0}, {1, 0}}, {{1, 1}, {0, 1}});
}

inline std::vector<Vec2> random_polyline(std::mt19937_64 &rng, int segments, double box = 1.0) {
  std::uniform_real_distribution<double> u(0.0, box);
  std::vector<Vec2> pts;
  while (static_cast<int>(pts.size()) < segments + 1) {
    const Vec2 p{u(rng), u(rng)};
    // keep segments from collapsing so mu stays reasonable
    if (pts.empty() || distance(pts.back(), p) > 0.05 * box)
      pts.push_back(p);
  }
  return pts;
}

inline ParameterSpace random_space(std::mt19937_64 &rng, int min_seg, int max_seg) {
  std::uniform_int_distribution<int> n(min_seg, max_seg);
  const int n1 = n(rng);
  const int n2 = n(rng);
  return space_of(random_polyline(rng, n1), random_polyline(rng, n2));
}

inline ParamPoint random_point(std::mt19937_64 &rng, const ParameterCell &c) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {c.x0 + u(rng) * c.width(), c.y0 + u(rng) * c.height()};
}

inline ParamPoint random_point(std::mt19937_64 &rng, const ParameterSpace &s) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {u(rng) * s.width(), u(rng) * s.height()};
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// F(a) = integral of sqrt(1 + t^2) from 0 to a.
inline double arsinh_antiderivative(double a) {
  return 0.5 * (std::asinh(a) + a * std::sqrt(1.0 + a * a));
}

// Axis-parallel staircase from (0,0) to (W,H) with `steps` random runs.
inline MonotonePath random_staircase(std::mt19937_64 &rng, const ParameterSpace &s, int steps) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs{0.0, s.width()}, ys{0.0, s.height()};
  for (int i = 1; i < steps; ++i) {
    xs.push_back(u(rng) * s.width());
    ys.push_back(u(rng) * s.height());
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<ParamPoint> pts{{0, 0}};
  for (int i = 1; i <= steps; ++i) {
    pts.push_back({xs[i], ys[i - 1]});
    pts.push_back({xs[i], ys[i]});
  }
  return MonotonePath::from_points(s, pts);
}

struct Group {
  std::size_t col, row;
  std::vector<ParamPoint> pts;
};

// Maximal runs of the path inside a single closed cell; a run along a
// parameter line stays with the cell the path was in before it.
inline std::vector<Group> cell_groups(const ParameterSpace &s, const MonotonePath &p) {
  std::vector<Group> out;
  const auto v = p.vertices();
  for (std::size_t i = 1; i < v.size(); ++i)
    for (const WeightedSegment &seg : split_at_parameter_lines(s, v[i - 1], v[i])) {
      if (d1(seg.a, seg.b) <= 1e-14)
        continue;
      const bool stays = !out.empty() && s.cell(out.back().col, out.back().row).contains(seg.a, 1e-12) &&
                         s.cell(out.back().col, out.back().row).contains(seg.b, 1e-12);
      if (!stays)
        out.push_back({seg.col, seg.row, {seg.a}});
      out.back().pts.push_back(seg.b);
    }
  return out;
}

// Part of a monotone polyline inside R(a, b).
inline std::vector<ParamPoint> clip(std::span<const ParamPoint> v, ParamPoint a, ParamPoint b) {
  std::vector<ParamPoint> out;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const ParamPoint p = v[i - 1], q = v[i];
    // parameter range of pq inside the box, per coordinate
    double lo = 0, hi = 1;
    auto limit = [&](double p0, double q0, double mn, double mx) {
      const double d = q0 - p0;
      if (std::abs(d) < 1e-15) {
        if (p0 < mn - 1e-12 || p0 > mx + 1e-12)
          hi = -1;
        return;
      }
      lo = std::max(lo, (mn - p0) / d);
      hi = std::min(hi, (mx - p0) / d);
    };
    limit(p.x, q.x, a.x, b.x);
    limit(p.y, q.y, a.y, b.y);
    if (hi < lo)
      continue;
    const ParamPoint s = lerp(p, q, lo), e = lerp(p, q, hi);
    if (out.empty() || d1(out.back(), s) > 1e-12)
      out.push_back(s);
    out.push_back(e);
  }
  return out;
}

} // namespace ifd::test

#endif
