#include "ifd/curve.hpp"

#include "ifd/errors.hpp"

#include <algorithm>
#include <limits>

namespace ifd {

namespace {

constexpr double kDuplicateRelTol = 1e-12;
constexpr double kEvalSlack = 1e-9;

double bbox_diagonal(std::span<const Vec2> points) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const Vec2 &p : points) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

} // namespace

PolygonalCurve::PolygonalCurve(std::span<const Vec2> points) {
  if (points.empty())
    throw Error(ErrorCode::TooFewVertices, "curve has no vertices");
  for (const Vec2 &p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(ErrorCode::InvalidArgument, "non-finite curve coordinate");

  const double tol = kDuplicateRelTol * bbox_diagonal(points);
  vertices_.reserve(points.size());
  vertices_.push_back(points.front());
  for (std::size_t k = 1; k < points.size(); ++k)
    if (distance(points[k], vertices_.back()) > tol)
      vertices_.push_back(points[k]);

  if (vertices_.size() < 2)
    throw Error(ErrorCode::TooFewVertices,
                "curve needs at least 2 distinct vertices");

  cum_.resize(vertices_.size());
  cum_[0] = 0.0;
  for (std::size_t k = 1; k < vertices_.size(); ++k)
    cum_[k] = cum_[k - 1] + distance(vertices_[k - 1], vertices_[k]);
}

Vec2 PolygonalCurve::direction(std::size_t i) const {
  const Vec2 d = vertices_[i + 1] - vertices_[i];
  return d * (1.0 / norm(d));
}

std::size_t PolygonalCurve::segment_at(double s) const {
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
  if (it == cum_.begin())
    return 0;
  return std::min<std::size_t>(static_cast<std::size_t>(it - cum_.begin()) - 1,
                               segment_count() - 1);
}

Vec2 PolygonalCurve::point_at(double s) const {
  if (!(s >= -kEvalSlack && s <= length() + kEvalSlack))
    throw Error(ErrorCode::OutOfRange,
                "arc length " + std::to_string(s) + " outside [0, " +
                    std::to_string(length()) + "]");
  s = std::clamp(s, 0.0, length());
  const std::size_t i = segment_at(s);
  const double offset = s - cum_[i];
  if (offset == 0.0)
    return vertices_[i];
  if (s == cum_[i + 1])
    return vertices_[i + 1];
  const double t = offset / segment_length(i);
  return vertices_[i] + (vertices_[i + 1] - vertices_[i]) * t;
}

PolygonalCurve PolygonalCurve::scaled(double factor) const {
  std::vector<Vec2> pts(vertices_.begin(), vertices_.end());
  for (Vec2 &p : pts)
    p = p * factor;
  return PolygonalCurve(pts);
}

CurveStats stats(const PolygonalCurve &t1, const PolygonalCurve &t2) {
  double shortest = std::numeric_limits<double>::infinity();
  double longest = 0.0;
  for (const PolygonalCurve *c : {&t1, &t2}) {
    for (std::size_t i = 0; i < c->segment_count(); ++i) {
      shortest = std::min(shortest, c->segment_length(i));
      longest = std::max(longest, c->segment_length(i));
    }
  }
  return {shortest, longest / shortest, t1.length(), t2.length()};
}

} // namespace ifd
