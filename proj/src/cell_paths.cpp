#include "ifd/cell_paths.hpp"

#include "ifd/errors.hpp"
#include "ifd/integrals.hpp"
#include "ifd/path.hpp"
#include "ifd/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ifd {

namespace {

double cell_tol(const ParameterCell &cell) {
  return 1e-9 * std::max({1.0, cell.width(), cell.height()});
}

ParamPoint clamp_to(const ParameterCell &cell, ParamPoint p) {
  return {std::clamp(p.x, cell.x0, cell.x1), std::clamp(p.y, cell.y0, cell.y1)};
}

} // namespace

CellPath cell_shortest_path(const ParameterSpace &space, const ParameterCell &cell,
                            ParamPoint a, ParamPoint b) {
  const double tol = cell_tol(cell);
  if (!cell.contains(a, tol) || !cell.contains(b, tol))
    throw Error(ErrorCode::InvalidArgument, "cell_shortest_path: point outside cell");
  if (!leq_xy(a, b, tol))
    throw Error(ErrorCode::NotMonotone, "cell_shortest_path needs a <=_xy b");
  a = clamp_to(cell, a);
  b = clamp_to(cell, b);
  b = {std::max(a.x, b.x), std::max(a.y, b.y)};

  const FreeSpaceAxes axes = free_space_axes(cell);
  const double k = axes.offset;
  // y - x over R(a, b) ranges over [a.y - b.x, b.y - a.x]
  const double lo = a.y - b.x, hi = b.y - a.x;
  const double eps = space.tolerance();

  CellPath path;
  std::vector<ParamPoint> pts;
  if (k >= lo - eps && k <= hi + eps) {
    // bottom-left and top-right points of the axis inside R
    ParamPoint c1 = (a.y - k >= a.x) ? ParamPoint{a.y - k, a.y} : ParamPoint{a.x, a.x + k};
    ParamPoint c2 = (b.y - k <= b.x) ? ParamPoint{b.y - k, b.y} : ParamPoint{b.x, b.x + k};
    c1 = {std::clamp(c1.x, a.x, b.x), std::clamp(c1.y, a.y, b.y)};
    c2 = {std::clamp(c2.x, c1.x, b.x), std::clamp(c2.y, c1.y, b.y)};
    pts = {a, c1, c2, b};
    path.branch = CellPathBranch::ThroughAxis;
  } else if (k > hi) {
    pts = {a, {a.x, b.y}, b}; // axis above R: up, then right
    path.branch = CellPathBranch::AroundCorner;
  } else {
    pts = {a, {b.x, a.y}, b}; // axis below R: right, then up
    path.branch = CellPathBranch::AroundCorner;
  }

  // pieces are computed before simplification so the axis piece keeps its
  // exact endpoints
  path.weighted_length = 0.0;
  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    const ParamPoint p = pts[s], q = pts[s + 1];
    if (p == q)
      continue;
    SegmentKind kind = SegmentKind::General;
    if (p.x == q.x || p.y == q.y)
      kind = SegmentKind::AxisAligned;
    else if (path.branch == CellPathBranch::ThroughAxis && s == 1 &&
             cell.degeneracy == Degeneracy::None)
      kind = SegmentKind::OnAxis;
    path.weighted_length +=
        weighted_length(space, WeightedSegment{p, q, kind, cell.col, cell.row});
  }
  path.vertices = simplify_polyline(pts, 0.0);
  if (path.vertices.empty())
    path.vertices = {a};
  return path;
}

CellPath cell_path_or_fallback(const ParameterSpace &space,
                               const ParameterCell &cell, ParamPoint a,
                               ParamPoint b) {
  if (cell.degeneracy != Degeneracy::Antiparallel)
    return cell_shortest_path(space, cell, a, b);
  if (a == b)
    return {{a}, CellPathBranch::DegenerateFallback, 0.0};
  OracleResult r = staircase_cell_oracle(space, cell, a, b, 256, true);
  return {simplify_polyline(r.path, 0.0), CellPathBranch::DegenerateFallback, r.value};
}

CellPath two_cell_path(const ParameterSpace &space, const ParameterCell &from,
                       const ParameterCell &to, ParamPoint o, ParamPoint p) {
  const bool vertical_edge = to.col == from.col + 1 && to.row == from.row;
  const bool horizontal_edge = to.row == from.row + 1 && to.col == from.col;
  if (!vertical_edge && !horizontal_edge)
    throw Error(ErrorCode::InvalidArgument,
                "two_cell_path: second cell must be the right or upper neighbour");
  const FreeSpaceAxes ax_o = free_space_axes(from);
  const FreeSpaceAxes ax_p = free_space_axes(to);
  const double tol = std::max(cell_tol(from), cell_tol(to));
  if (!ax_o.on_ell_line(o, tol) || !from.contains(o, tol) ||
      !ax_p.on_ell_line(p, tol) || !to.contains(p, tol))
    throw Error(ErrorCode::NotOnAxis, "two_cell_path: endpoints must lie on the cells' axes");
  if (!leq_xy(o, p, tol))
    throw Error(ErrorCode::NotMonotone, "two_cell_path needs o <=_xy p");

  const double edge_pos = vertical_edge ? from.x1 : from.y1;
  auto on_edge = [&](ParamPoint q) {
    return std::abs((vertical_edge ? q.x : q.y) - edge_pos) <= tol;
  };

  auto combine = [&](const CellPath &first, const CellPath &second) {
    std::vector<ParamPoint> pts = first.vertices;
    pts.insert(pts.end(), second.vertices.begin(), second.vertices.end());
    CellPath out;
    out.vertices = simplify_polyline(pts, 0.0);
    out.weighted_length = first.weighted_length + second.weighted_length;
    out.branch = CellPathBranch::ThroughAxis;
    return out;
  };

  // axes meet the shared edge in order: run along both axes and the edge
  if (ax_o.ell && ax_p.ell) {
    const ParamPoint co = ax_o.ell->b, cp = ax_p.ell->a;
    if (on_edge(co) && on_edge(cp) && leq_xy(co, cp, tol) && leq_xy(o, co, tol) &&
        leq_xy(cp, p, tol)) {
      std::vector<ParamPoint> pts{o, co, cp, p};
      CellPath out;
      out.weighted_length =
          weighted_length(space, WeightedSegment{o, co, from.degeneracy == Degeneracy::None
                                                            ? SegmentKind::OnAxis
                                                            : SegmentKind::General,
                                                 from.col, from.row}) +
          weighted_length(space, co, cp) +
          weighted_length(space, WeightedSegment{cp, p, to.degeneracy == Degeneracy::None
                                                            ? SegmentKind::OnAxis
                                                            : SegmentKind::General,
                                                 to.col, to.row});
      // keep the canonical [o, c_o, c_p, p] shape, minus repeated points
      for (const ParamPoint &q : pts)
        if (out.vertices.empty() || !(out.vertices.back() == q))
          out.vertices.push_back(q);
      out.branch = CellPathBranch::ThroughAxis;
      return out;
    }
  }

  // otherwise search the crossing point z on the shared edge
  double lo, hi;
  if (vertical_edge) {
    lo = std::max(from.y0, o.y);
    hi = std::min(from.y1, p.y);
  } else {
    lo = std::max(from.x0, o.x);
    hi = std::min(from.x1, p.x);
  }
  if (lo > hi + tol)
    throw Error(ErrorCode::InvalidArgument, "two_cell_path: no monotone crossing of the shared edge");
  hi = std::max(lo, hi);
  auto point_on_edge = [&](double s) {
    return vertical_edge ? ParamPoint{edge_pos, s} : ParamPoint{s, edge_pos};
  };
  auto cost = [&](double s) {
    const ParamPoint z = point_on_edge(s);
    return cell_shortest_path(space, from, o, z).weighted_length +
           cell_shortest_path(space, to, z, p).weighted_length;
  };

  constexpr int kScan = 64;
  double best_s = lo, best_c = std::numeric_limits<double>::infinity();
  int best_k = 0;
  for (int k = 0; k <= kScan; ++k) {
    const double s = lo + (hi - lo) * k / kScan;
    const double c = cost(s);
    if (c < best_c) {
      best_c = c;
      best_s = s;
      best_k = k;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best_k - 1) / kScan;
  double b = lo + (hi - lo) * std::min(kScan, best_k + 1) / kScan;
  const double stop = 1e-12 * std::max(hi - lo, (vertical_edge ? from.height() : from.width()));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double m1 = b - inv_phi * (b - a), m2 = a + inv_phi * (b - a);
  double f1 = cost(m1), f2 = cost(m2);
  for (int it = 0; it < 200 && b - a > stop; ++it) {
    if (f1 <= f2) {
      b = m2;
      m2 = m1;
      f2 = f1;
      m1 = b - inv_phi * (b - a);
      f1 = cost(m1);
    } else {
      a = m1;
      m1 = m2;
      f1 = f2;
      m2 = a + inv_phi * (b - a);
      f2 = cost(m2);
    }
  }
  const double s_star = 0.5 * (a + b);
  if (cost(s_star) < best_c)
    best_s = s_star;
  const ParamPoint z = point_on_edge(best_s);
  return combine(cell_shortest_path(space, from, o, z),
                 cell_shortest_path(space, to, z, p));
}

SimilarityProfile::SimilarityProfile(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {}

double SimilarityProfile::operator()(double delta) const {
  double total = 0.0;
  for (const Piece &pc : pieces_) {
    if (pc.z1 == pc.z0) {
      if (pc.w_const <= delta)
        total += pc.l1;
      continue;
    }
    if (delta < pc.h)
      continue;
    const double r = std::sqrt(delta * delta - pc.h * pc.h);
    const double overlap = std::min(pc.z1, r) - std::max(pc.z0, -r);
    if (overlap > 0.0)
      total += pc.l1 * std::min(1.0, overlap / (pc.z1 - pc.z0));
  }
  return total;
}

double SimilarityProfile::total_length() const {
  double total = 0.0;
  for (const Piece &pc : pieces_)
    total += pc.l1;
  return total;
}

std::vector<double> SimilarityProfile::breakpoints() const {
  std::vector<double> out;
  for (const Piece &pc : pieces_) {
    if (pc.z1 == pc.z0) {
      out.push_back(pc.w_const);
      continue;
    }
    const double w0 = std::hypot(pc.z0, pc.h), w1 = std::hypot(pc.z1, pc.h);
    out.push_back(w0);
    out.push_back(w1);
    out.push_back(pc.z0 <= 0.0 && pc.z1 >= 0.0 ? pc.h : std::min(w0, w1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimilarityProfile partial_similarity_profile(const ParameterSpace &,
                                             const ParameterCell &cell,
                                             std::span<const ParamPoint> path) {
  std::vector<SimilarityProfile::Piece> pieces;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const ParamPoint a = path[k], b = path[k + 1];
    const double l1 = d1(a, b);
    if (l1 == 0.0)
      continue;
    const Vec2 da = cell.leash(a);
    const Vec2 vel = cell.leash(b) - da;
    const double speed = norm(vel);
    SimilarityProfile::Piece pc;
    pc.l1 = l1;
    if (speed <= 1e-14 * std::max(norm(da), l1)) {
      pc.w_const = cell.weight(lerp(a, b, 0.5));
    } else {
      pc.z0 = dot(da, vel) / speed;
      pc.z1 = pc.z0 + speed;
      pc.h = std::abs(da.x * vel.y - da.y * vel.x) / speed;
    }
    pieces.push_back(pc);
  }
  return SimilarityProfile(std::move(pieces));
}

} // namespace ifd
