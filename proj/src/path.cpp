#include "ifd/path.hpp"

#include "ifd/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ifd {

MonotonePath MonotonePath::from_points(const ParameterSpace &space,
                                       std::vector<ParamPoint> points,
                                       double tol) {
  const double eps = tol * std::max({1.0, space.width(), space.height()});
  if (points.size() < 2)
    throw Error(ErrorCode::NotMonotone, "path needs at least two points");
  if (d1(points.front(), space.source()) > eps ||
      d1(points.back(), space.sink()) > eps)
    throw Error(ErrorCode::NotMonotone, "path must run from (0,0) to (|T1|,|T2|)");
  points.front() = space.source();
  points.back() = space.sink();
  for (std::size_t k = 1; k < points.size(); ++k) {
    ParamPoint &p = points[k];
    const ParamPoint q = points[k - 1];
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(ErrorCode::NotMonotone, "path has a non-finite vertex");
    if (p.x < q.x - eps || p.y < q.y - eps)
      throw Error(ErrorCode::NotMonotone,
                  "path steps backwards at vertex " + std::to_string(k));
    p.x = std::max(p.x, q.x);
    p.y = std::max(p.y, q.y);
  }
  // clamping may have pushed the last interior vertices past the sink
  for (ParamPoint &p : points) {
    p.x = std::min(p.x, space.width());
    p.y = std::min(p.y, space.height());
  }

  MonotonePath path;
  path.points_ = std::move(points);
  path.cum_.resize(path.points_.size());
  path.cum_[0] = 0.0;
  for (std::size_t k = 1; k < path.points_.size(); ++k)
    path.cum_[k] = path.cum_[k - 1] + d1(path.points_[k - 1], path.points_[k]);
  return path;
}

ParamPoint MonotonePath::at(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  const double target = t * l1_length();
  if (target <= 0.0)
    return points_.front();
  if (t >= 1.0)
    return points_.back();
  const auto it = std::lower_bound(cum_.begin(), cum_.end(), target);
  const std::size_t k = static_cast<std::size_t>(it - cum_.begin());
  const double seg = cum_[k] - cum_[k - 1];
  if (seg <= 0.0)
    return points_[k];
  return lerp(points_[k - 1], points_[k], (target - cum_[k - 1]) / seg);
}

std::vector<ParamPoint> simplify_polyline(std::span<const ParamPoint> pts,
                                          double tol) {
  std::vector<ParamPoint> out;
  for (const ParamPoint &p : pts) {
    if (!out.empty() && d1(out.back(), p) <= tol) {
      if (out.size() > 1)
        out.back() = p; // keep exact later points, in particular the end
      continue;
    }
    while (out.size() >= 2) {
      const ParamPoint a = out[out.size() - 2], b = out.back();
      const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
      const double scale = d1(a, b) + d1(b, p);
      const bool forward = (b.x - a.x) * (p.x - b.x) + (b.y - a.y) * (p.y - b.y) >= 0;
      if (std::abs(cross) <= tol * scale && forward)
        out.pop_back();
      else
        break;
    }
    out.push_back(p);
  }
  if (out.size() == 1 && pts.size() >= 2 && !(pts.back() == out.front()))
    out.push_back(pts.back());
  return out;
}

} // namespace ifd
