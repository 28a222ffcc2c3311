#include "ifd/integrals.hpp"

#include "ifd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ifd {

namespace {

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// Integral of sqrt(z^2 + h^2) over [p, q] with 0 <= p <= q.
double hyp_integral_nonneg(double p, double q, double h) {
  if (q <= p)
    return 0.0;
  if (h <= 1e-12 * q)
    return 0.5 * (q - p) * (q + p);
  const double rq = std::hypot(q, h);
  const double rp = std::hypot(p, h);
  // q*rq - p*rp rewritten to avoid cancellation
  const double poly = (q - p) * (q + p) * (q * q + p * p + h * h) / (q * rq + p * rp);
  // arsinh(q/h) - arsinh(p/h) as a log1p of a small quantity
  const double a = q / h, b = p / h;
  const double sa = std::hypot(1.0, a), sb = std::hypot(1.0, b);
  const double diff = (q - p) / h;
  const double asinh_diff = std::log1p(diff * (1.0 + (a + b) / (sa + sb)) / (b + sb));
  return 0.5 * (poly + h * h * asinh_diff);
}

struct Crossing {
  double t;
  std::optional<double> x;
  std::optional<double> y;
};

} // namespace

double sqrt_hyp_integral(double z0, double z1, double h) {
  if (z0 > z1)
    return -sqrt_hyp_integral(z1, z0, h);
  h = std::abs(h);
  if (z0 >= 0.0)
    return hyp_integral_nonneg(z0, z1, h);
  if (z1 <= 0.0)
    return hyp_integral_nonneg(-z1, -z0, h);
  return hyp_integral_nonneg(0.0, -z0, h) + hyp_integral_nonneg(0.0, z1, h);
}

double sqrt_quadratic_integral(double a, double b, double c) {
  auto q = [&](double t) { return (a * t + b) * t + c; };
  double q_min = std::min(q(0.0), q(1.0));
  if (a > 0.0) {
    const double t0 = -b / (2.0 * a);
    if (t0 > 0.0 && t0 < 1.0)
      q_min = std::min(q_min, q(t0));
  }
  if (q_min < -1e-9)
    throw Error(ErrorCode::NegativeRadicand,
                "quadratic under the square root is negative on [0,1]");
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (a <= 1e-14 * scale) {
    // linear (or constant) radicand
    if (std::abs(b) <= 1e-14 * scale)
      return std::sqrt(std::max(0.0, c));
    const double hi = std::max(0.0, b + c);
    const double lo = std::max(0.0, c);
    return 2.0 / (3.0 * b) * (hi * std::sqrt(hi) - lo * std::sqrt(lo));
  }
  const double t0 = -b / (2.0 * a);
  const double h2 = std::max(0.0, c - b * b / (4.0 * a));
  const double sa = std::sqrt(a);
  return sa * sqrt_hyp_integral(-t0, 1.0 - t0, std::sqrt(h2 / a));
}

std::vector<WeightedSegment> split_at_parameter_lines(const ParameterSpace &space,
                                                      ParamPoint a, ParamPoint b) {
  std::vector<Crossing> cuts;
  auto collect = [&](std::span<const double> lines, double from, double to,
                     bool is_x) {
    const double lo = std::min(from, to), hi = std::max(from, to);
    auto it = std::upper_bound(lines.begin(), lines.end(), lo);
    for (; it != lines.end() && *it < hi; ++it) {
      const double t = (*it - from) / (to - from);
      Crossing c{t, std::nullopt, std::nullopt};
      (is_x ? c.x : c.y) = *it;
      cuts.push_back(c);
    }
  };
  collect(space.xs(), a.x, b.x, true);
  collect(space.ys(), a.y, b.y, false);
  std::sort(cuts.begin(), cuts.end(),
            [](const Crossing &l, const Crossing &r) { return l.t < r.t; });

  std::vector<ParamPoint> points{a};
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    ParamPoint p = lerp(a, b, cuts[k].t);
    if (cuts[k].x) p.x = *cuts[k].x;
    if (cuts[k].y) p.y = *cuts[k].y;
    // a corner crossing shows up once per line
    if (k + 1 < cuts.size() && cuts[k + 1].t - cuts[k].t <= 1e-15) {
      if (cuts[k + 1].x) p.x = *cuts[k + 1].x;
      if (cuts[k + 1].y) p.y = *cuts[k + 1].y;
      ++k;
    }
    points.push_back(p);
  }
  points.push_back(b);

  std::vector<WeightedSegment> pieces;
  pieces.reserve(points.size() - 1);
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const ParamPoint p = points[k], q = points[k + 1];
    if (p == q)
      continue;
    const ParameterCell &cell = space.locate(lerp(p, q, 0.5));
    const SegmentKind kind = (p.x == q.x || p.y == q.y) ? SegmentKind::AxisAligned
                                                        : SegmentKind::General;
    pieces.push_back({p, q, kind, cell.col, cell.row});
  }
  if (pieces.empty()) {
    const ParameterCell &cell = space.locate(a);
    pieces.push_back({a, b, SegmentKind::AxisAligned, cell.col, cell.row});
  }
  return pieces;
}

double weighted_length_axis_aligned(const ParameterSpace &space,
                                    const WeightedSegment &seg) {
  const ParameterCell &cell = space.cell(seg.col, seg.row);
  if (seg.a.y == seg.b.y) {
    if (seg.a.x == seg.b.x)
      return 0.0;
    // T2 point fixed, T1 moves along u.
    const Vec2 f = cell.q0 + cell.v * (seg.a.y - cell.y0);
    const Vec2 d0 = cell.p0 - f;
    const double h = cross(d0, cell.u);
    const double z_base = dot(d0, cell.u) - cell.x0;
    const double lo = std::min(seg.a.x, seg.b.x), hi = std::max(seg.a.x, seg.b.x);
    return sqrt_hyp_integral(z_base + lo, z_base + hi, h);
  }
  if (seg.a.x != seg.b.x)
    throw Error(ErrorCode::InvalidArgument,
                "weighted_length_axis_aligned: segment is not axis aligned");
  // T1 point fixed, T2 moves along v.
  const Vec2 g = cell.p0 + cell.u * (seg.a.x - cell.x0);
  const Vec2 d0 = g - cell.q0;
  const double h = cross(d0, cell.v);
  const double z_base = -dot(d0, cell.v) - cell.y0;
  const double lo = std::min(seg.a.y, seg.b.y), hi = std::max(seg.a.y, seg.b.y);
  return sqrt_hyp_integral(z_base + lo, z_base + hi, h);
}

double weighted_length_on_axis(const ParameterSpace &space,
                               const WeightedSegment &seg) {
  const ParameterCell &cell = space.cell(seg.col, seg.row);
  const FreeSpaceAxes axes = free_space_axes(cell);
  const double tol = 1e-9 * std::max({1.0, cell.width(), cell.height()});
  if (!axes.on_ell_line(seg.a, tol) || !axes.on_ell_line(seg.b, tol))
    throw Error(ErrorCode::NotOnAxis, "segment endpoints are not on the monotone axis");
  ParamPoint lo = seg.a, hi = seg.b;
  if (hi.x < lo.x)
    std::swap(lo, hi);
  auto trapezoid = [&](ParamPoint p, ParamPoint q) {
    return 0.5 * (cell.weight(p) + cell.weight(q)) * d1(p, q);
  };
  if (cell.degeneracy == Degeneracy::None && axes.center.x > lo.x &&
      axes.center.x < hi.x) {
    const ParamPoint mid{axes.center.x, axes.center.x + axes.offset};
    return trapezoid(lo, mid) + trapezoid(mid, hi);
  }
  return trapezoid(lo, hi);
}

double weighted_length_general(const ParameterSpace &space,
                               const WeightedSegment &seg) {
  const ParameterCell &cell = space.cell(seg.col, seg.row);
  const Vec2 da = cell.leash(seg.a);
  const Vec2 vel = cell.leash(seg.b) - da;
  const double l1 = d1(seg.a, seg.b);
  if (l1 == 0.0)
    return 0.0;
  const double speed = norm(vel);
  if (speed <= 1e-14 * std::max(norm(da), l1))
    return cell.weight(lerp(seg.a, seg.b, 0.5)) * l1;
  const double z0 = dot(da, vel) / speed;
  const double h = cross(da, vel) / speed;
  return l1 / speed * sqrt_hyp_integral(z0, z0 + speed, h);
}

double weighted_length(const ParameterSpace &space, const WeightedSegment &seg) {
  switch (seg.kind) {
  case SegmentKind::AxisAligned: return weighted_length_axis_aligned(space, seg);
  case SegmentKind::OnAxis: return weighted_length_on_axis(space, seg);
  case SegmentKind::General: return weighted_length_general(space, seg);
  }
  return weighted_length_general(space, seg);
}

double weighted_length(const ParameterSpace &space, ParamPoint a, ParamPoint b) {
  double total = 0.0;
  for (const WeightedSegment &piece : split_at_parameter_lines(space, a, b))
    total += weighted_length(space, piece);
  return total;
}

namespace {

constexpr int kMaxDepth = 60;
constexpr int kMinDepth = 4;

struct Simpson {
  std::function<double(double)> f;

  double run(double a, double b, double fa, double fm, double fb, double whole,
             double eps, int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= kMinDepth && std::abs(delta) <= 15.0 * eps)
      return left + right + delta / 15.0;
    if (depth >= kMaxDepth)
      throw Error(ErrorCode::NonConvergence, "adaptive Simpson exceeded depth 60");
    return run(a, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
           run(m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
  }
};

} // namespace

double quadrature_weighted_length(const ParameterSpace &space, ParamPoint a,
                                  ParamPoint b, double rel_tol) {
  double total = 0.0;
  for (const WeightedSegment &piece : split_at_parameter_lines(space, a, b)) {
    const double l1 = d1(piece.a, piece.b);
    if (l1 == 0.0)
      continue;
    Simpson s{[&](double t) { return weight(space, lerp(piece.a, piece.b, t)); }};
    // coarse composite estimate sets the absolute tolerance scale
    double coarse = 0.0;
    for (int k = 0; k <= 16; ++k)
      coarse += s.f(k / 16.0) * ((k == 0 || k == 16) ? 0.5 : 1.0);
    coarse /= 16.0;
    const double eps = rel_tol * std::max(std::abs(coarse), 1e-300);
    const double fa = s.f(0.0), fm = s.f(0.5), fb = s.f(1.0);
    const double whole = (fa + 4.0 * fm + fb) / 6.0;
    total += l1 * s.run(0.0, 1.0, fa, fm, fb, whole, eps, 0);
  }
  return total;
}

} // namespace ifd
