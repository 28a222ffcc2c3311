#include "ifd/param_space.hpp"

#include "ifd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ifd {

namespace {

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// Minimizer of w^2 over the plane in global coordinates, and the minimum.
// Degenerate cells have a whole line of minimizers; the point of that line
// closest to the cell midpoint is returned.
struct Center {
  ParamPoint point;
  double q_min;
};

Center quadratic_center(const ParameterCell &cell) {
  const Vec2 d0 = cell.p0 - cell.q0;
  const double du = dot(d0, cell.u);
  const double dv = dot(d0, cell.v);
  const double mx = 0.5 * cell.width();
  const double my = 0.5 * cell.height();
  double s = 0.0, t = 0.0;
  switch (cell.degeneracy) {
  case Degeneracy::None: {
    const double det = 1.0 - cell.c * cell.c;
    s = (cell.c * dv - du) / det;
    t = (dv - cell.c * du) / det;
    break;
  }
  case Degeneracy::Parallel: {
    // minimizers: t = s + (du + dv) / 2
    const double k = 0.5 * (du + dv);
    s = 0.5 * (mx + my - k);
    t = s + k;
    break;
  }
  case Degeneracy::Antiparallel: {
    // minimizers: s + t = -(du - dv) / 2
    const double k = -0.5 * (du - dv);
    s = 0.5 * (mx - my + k);
    t = k - s;
    break;
  }
  }
  const ParamPoint p{cell.x0 + s, cell.y0 + t};
  const double w = cell.weight(p);
  return {p, cell.degeneracy == Degeneracy::None ? 0.0 : w * w};
}

// Closest point of the segment base + tau * dir, tau in [0, len], to f.
double project_clamped(Vec2 f, Vec2 base, Vec2 dir, double len) {
  return std::clamp(dot(f - base, dir), 0.0, len);
}

// {tau in [0, len] : |base + tau dir - f| <= delta}.
std::optional<Interval> sublevel_on_edge(Vec2 f, Vec2 base, Vec2 dir,
                                         double len, double delta) {
  const Vec2 d = base - f;
  const double h = std::abs(cross(d, dir));
  if (h > delta)
    return std::nullopt;
  const double mid = -dot(d, dir);
  const double r = std::sqrt(std::max(0.0, delta * delta - h * h));
  const double lo = std::max(0.0, mid - r);
  const double hi = std::min(len, mid + r);
  if (lo > hi)
    return std::nullopt;
  return Interval{lo, hi};
}

// Sutherland-Hodgman clip of a convex polygon by a*x + b*y <= rhs.
std::vector<ParamPoint> clip_halfplane(const std::vector<ParamPoint> &poly,
                                       double a, double b, double rhs) {
  std::vector<ParamPoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ParamPoint p = poly[i];
    const ParamPoint q = poly[(i + 1) % n];
    const double fp = a * p.x + b * p.y - rhs;
    const double fq = a * q.x + b * q.y - rhs;
    if (fp <= 0)
      out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0))
      out.push_back(lerp(p, q, fp / (fp - fq)));
  }
  return out;
}

} // namespace

std::vector<ParameterCell> build_cells(const PolygonalCurve &t1,
                                       const PolygonalCurve &t2) {
  std::vector<ParameterCell> cells;
  cells.reserve(t1.segment_count() * t2.segment_count());
  const auto xs = t1.cum_length();
  const auto ys = t2.cum_length();
  for (std::size_t j = 0; j < t2.segment_count(); ++j) {
    for (std::size_t i = 0; i < t1.segment_count(); ++i) {
      ParameterCell cell;
      cell.col = i;
      cell.row = j;
      cell.x0 = xs[i];
      cell.x1 = xs[i + 1];
      cell.y0 = ys[j];
      cell.y1 = ys[j + 1];
      cell.p0 = t1.vertices()[i];
      cell.q0 = t2.vertices()[j];
      cell.u = t1.direction(i);
      cell.v = t2.direction(j);
      cell.c = std::clamp(dot(cell.u, cell.v), -1.0, 1.0);
      if (cell.c >= kDegenerateCos)
        cell.degeneracy = Degeneracy::Parallel;
      else if (cell.c <= -kDegenerateCos)
        cell.degeneracy = Degeneracy::Antiparallel;
      cells.push_back(cell);
    }
  }
  return cells;
}

ParameterSpace::ParameterSpace(PolygonalCurve t1, PolygonalCurve t2)
    : t1_(std::move(t1)), t2_(std::move(t2)), cells_(build_cells(t1_, t2_)),
      tol_(1e-12 * std::max(t1_.length(), t2_.length())) {}

const ParameterCell &ParameterSpace::locate(ParamPoint p) const {
  return cell(t1_.segment_at(p.x), t2_.segment_at(p.y));
}

std::vector<ParameterEdge> ParameterSpace::edges() const {
  std::vector<ParameterEdge> out;
  const auto x = xs();
  const auto y = ys();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j + 1 < y.size(); ++j)
      out.push_back({true, x[i], y[j], y[j + 1]});
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      out.push_back({false, y[j], x[i], x[i + 1]});
  return out;
}

double weight(const PolygonalCurve &t1, const PolygonalCurve &t2,
              ParamPoint p) {
  return distance(t1.point_at(p.x), t2.point_at(p.y));
}

double weight(const ParameterSpace &space, ParamPoint p) {
  return weight(space.first(), space.second(), p);
}

FreeSpaceAxes free_space_axes(const ParameterCell &cell, double tol) {
  if (cell.degeneracy == Degeneracy::Antiparallel)
    throw Error(ErrorCode::AntiparallelCell,
                "cell (" + std::to_string(cell.col) + "," +
                    std::to_string(cell.row) + ") has no monotone axis");
  const Center center = quadratic_center(cell);
  const double eps = tol * std::max({1.0, cell.width(), cell.height()});

  FreeSpaceAxes axes;
  axes.center = center.point;
  axes.offset = center.point.y - center.point.x;
  if (cell.degeneracy == Degeneracy::Parallel) {
    axes.slope = 0.0;
    axes.center_weight = std::sqrt(center.q_min);
    axes.hbar_defined = false;
  } else {
    axes.slope = 0.5 * norm(cell.u - cell.v);
    axes.center_weight = 0.0;
  }

  // y = x + offset clipped to the cell.
  {
    const double lo = std::max(cell.x0, cell.y0 - axes.offset);
    const double hi = std::min(cell.x1, cell.y1 - axes.offset);
    if (lo <= hi + eps) {
      const double a = std::min(lo, hi);
      const double b = std::max(lo, hi);
      axes.ell = ParamSegment{{a, std::clamp(a + axes.offset, cell.y0, cell.y1)},
                              {b, std::clamp(b + axes.offset, cell.y0, cell.y1)}};
    }
  }
  // y = -x + sum clipped to the cell.
  if (axes.hbar_defined) {
    const double sum = center.point.x + center.point.y;
    const double lo = std::max(cell.x0, sum - cell.y1);
    const double hi = std::min(cell.x1, sum - cell.y0);
    if (lo <= hi + eps) {
      const double a = std::min(lo, hi);
      const double b = std::max(lo, hi);
      axes.hbar = ParamSegment{{a, std::clamp(sum - a, cell.y0, cell.y1)},
                               {b, std::clamp(sum - b, cell.y0, cell.y1)}};
    }
  }
  return axes;
}

EdgeMinimum edge_min(const ParameterSpace &space, const ParameterEdge &edge) {
  const PolygonalCurve &t1 = space.first();
  const PolygonalCurve &t2 = space.second();
  if (edge.vertical) {
    const Vec2 f = t1.point_at(edge.fixed);
    const std::size_t j = t2.segment_at(0.5 * (edge.lo + edge.hi));
    const Vec2 base = t2.point_at(edge.lo);
    const double tau =
        project_clamped(f, base, t2.direction(j), edge.hi - edge.lo);
    const ParamPoint p{edge.fixed, edge.lo + tau};
    return {p, weight(space, p)};
  }
  const Vec2 f = t2.point_at(edge.fixed);
  const std::size_t i = t1.segment_at(0.5 * (edge.lo + edge.hi));
  const Vec2 base = t1.point_at(edge.lo);
  const double tau =
      project_clamped(f, base, t1.direction(i), edge.hi - edge.lo);
  const ParamPoint p{edge.lo + tau, edge.fixed};
  return {p, weight(space, p)};
}

QuadraticForm weight_form(const ParameterCell &cell) {
  const Vec2 d0 = cell.p0 - cell.q0;
  return {cell.c, dot(d0, cell.u), -dot(d0, cell.v), dot(d0, d0)};
}

double min_weight_in_cell(const ParameterCell &cell) {
  const Vec2 p1 = cell.p0 + cell.u * cell.width();
  const Vec2 q1 = cell.q0 + cell.v * cell.height();
  auto seg_min = [](Vec2 f, Vec2 base, Vec2 dir, double len) {
    return distance(f, base + dir * project_clamped(f, base, dir, len));
  };
  double best = std::min({seg_min(cell.q0, cell.p0, cell.u, cell.width()),
                          seg_min(q1, cell.p0, cell.u, cell.width()),
                          seg_min(cell.p0, cell.q0, cell.v, cell.height()),
                          seg_min(p1, cell.q0, cell.v, cell.height())});
  if (cell.degeneracy == Degeneracy::None) {
    const Center center = quadratic_center(cell);
    if (cell.contains(center.point, 0.0))
      best = std::min(best, cell.weight(center.point));
  }
  return best;
}

EllipseSlice::EllipseSlice(const ParameterCell &cell, double delta)
    : cell_(cell), delta_(delta), form_(weight_form(cell)) {
  if (!(delta >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "ellipse slice needs delta >= 0");
  const Vec2 p1 = cell.p0 + cell.u * cell.width();
  const Vec2 q1 = cell.q0 + cell.v * cell.height();
  auto shift = [](std::optional<Interval> iv, double base) {
    if (iv) {
      iv->lo += base;
      iv->hi += base;
    }
    return iv;
  };
  // bottom: y = y0, x varies; right: x = x1; top: y = y1; left: x = x0.
  crossings_[0] = shift(
      sublevel_on_edge(cell.q0, cell.p0, cell.u, cell.width(), delta), cell.x0);
  crossings_[1] = shift(
      sublevel_on_edge(p1, cell.q0, cell.v, cell.height(), delta), cell.y0);
  crossings_[2] = shift(
      sublevel_on_edge(q1, cell.p0, cell.u, cell.width(), delta), cell.x0);
  crossings_[3] = shift(
      sublevel_on_edge(cell.p0, cell.q0, cell.v, cell.height(), delta),
      cell.y0);
  empty_ = min_weight_in_cell(cell) > delta;
}

bool EllipseSlice::contains(ParamPoint p, double slack) const {
  return cell_.contains(p, slack) && cell_.weight(p) <= delta_ + slack;
}

std::vector<ParamPoint> EllipseSlice::outline(int samples) const {
  if (empty_)
    return {};
  const Center center = quadratic_center(cell_);
  const double r2 = delta_ * delta_ - center.q_min;
  const ParamPoint m = center.point;
  const double span = 2.0 * (cell_.width() + cell_.height()) +
                      std::abs(m.x - cell_.x0) + std::abs(m.y - cell_.y0);
  std::vector<ParamPoint> poly;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  auto along = [&](double alpha, double beta) {
    // alpha along (1,1)/sqrt2, beta along (1,-1)/sqrt2
    return ParamPoint{m.x + (alpha + beta) * inv_sqrt2,
                      m.y + (alpha - beta) * inv_sqrt2};
  };
  if (r2 <= 0.0) {
    if (cell_.contains(m, 0.0))
      return {m};
    return {};
  }
  switch (cell_.degeneracy) {
  case Degeneracy::None: {
    const double a = std::sqrt(r2 / (1.0 - cell_.c));
    const double b = std::sqrt(r2 / (1.0 + cell_.c));
    for (int k = 0; k < samples; ++k) {
      const double th = 2.0 * std::numbers::pi * k / samples;
      poly.push_back(along(a * std::cos(th), b * std::sin(th)));
    }
    break;
  }
  case Degeneracy::Parallel: {
    const double b = std::sqrt(r2 / (1.0 + cell_.c));
    poly = {along(-span, -b), along(span, -b), along(span, b), along(-span, b)};
    break;
  }
  case Degeneracy::Antiparallel: {
    const double a = std::sqrt(r2 / (1.0 - cell_.c));
    poly = {along(-a, -span), along(a, -span), along(a, span), along(-a, span)};
    break;
  }
  }
  // Orient counter-clockwise before clipping.
  double area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const ParamPoint p = poly[i], q = poly[(i + 1) % poly.size()];
    area += p.x * q.y - q.x * p.y;
  }
  if (area < 0)
    std::reverse(poly.begin(), poly.end());
  poly = clip_halfplane(poly, -1, 0, -cell_.x0);
  poly = clip_halfplane(poly, 1, 0, cell_.x1);
  poly = clip_halfplane(poly, 0, -1, -cell_.y0);
  poly = clip_halfplane(poly, 0, 1, cell_.y1);
  return poly;
}

} // namespace ifd
