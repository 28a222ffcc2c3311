#ifndef IFD_PARAM_SPACE_HPP
#define IFD_PARAM_SPACE_HPP

#include "ifd/curve.hpp"
#include "ifd/geometry.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ifd {

enum class Degeneracy { None, Parallel, Antiparallel };

// |c| at or above this is treated as (anti)parallel.
inline constexpr double kDegenerateCos = 1.0 - 1e-9;

/// One segment x segment rectangle of the parameter space. Inside it the
/// leash T1(x) - T2(y) is affine in (x, y), so w^2 is a quadratic form with
/// Hessian [[1, -c], [-c, 1]].
struct ParameterCell {
  std::size_t col = 0; // segment of T1
  std::size_t row = 0; // segment of T2
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  Vec2 p0; // T1(x0)
  Vec2 q0; // T2(y0)
  Vec2 u;  // unit direction of T1's segment
  Vec2 v;  // unit direction of T2's segment
  double c = 0;
  Degeneracy degeneracy = Degeneracy::None;

  Vec2 leash(ParamPoint p) const {
    return (p0 - q0) + u * (p.x - x0) - v * (p.y - y0);
  }
  double weight(ParamPoint p) const { return norm(leash(p)); }
  bool contains(ParamPoint p, double tol) const {
    return p.x >= x0 - tol && p.x <= x1 + tol && p.y >= y0 - tol &&
           p.y <= y1 + tol;
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

/// Axis-aligned piece of a parameter line between two adjacent grid points.
struct ParameterEdge {
  bool vertical = false;
  double fixed = 0; // x of a vertical edge, y of a horizontal one
  double lo = 0, hi = 0;
  ParamPoint start() const { return vertical ? ParamPoint{fixed, lo} : ParamPoint{lo, fixed}; }
  ParamPoint end() const { return vertical ? ParamPoint{fixed, hi} : ParamPoint{hi, fixed}; }
};

/// The rectangle [0,|T1|] x [0,|T2|] refined into parameter cells.
class ParameterSpace {
public:
  ParameterSpace(PolygonalCurve t1, PolygonalCurve t2);

  const PolygonalCurve &first() const { return t1_; }
  const PolygonalCurve &second() const { return t2_; }

  std::size_t cols() const { return t1_.segment_count(); }
  std::size_t rows() const { return t2_.segment_count(); }
  double width() const { return t1_.length(); }
  double height() const { return t2_.length(); }
  ParamPoint source() const { return {0.0, 0.0}; }
  ParamPoint sink() const { return {width(), height()}; }

  /// Positions of the vertical (xs) and horizontal (ys) parameter lines.
  std::span<const double> xs() const { return t1_.cum_length(); }
  std::span<const double> ys() const { return t2_.cum_length(); }

  const ParameterCell &cell(std::size_t col, std::size_t row) const {
    return cells_[row * cols() + col];
  }
  std::span<const ParameterCell> cells() const { return cells_; }

  /// Cell containing p; points on parameter lines go to the cell above/right
  /// except on the far boundary.
  const ParameterCell &locate(ParamPoint p) const;

  /// All parameter edges, including those on the boundary of P.
  std::vector<ParameterEdge> edges() const;

  /// Absolute tolerance used for geometric identity, 1e-12 of the larger side.
  double tolerance() const { return tol_; }

  bool contains(ParamPoint p, double slack = 1e-9) const {
    return p.x >= -slack && p.y >= -slack && p.x <= width() + slack &&
           p.y <= height() + slack;
  }

private:
  PolygonalCurve t1_;
  PolygonalCurve t2_;
  std::vector<ParameterCell> cells_;
  double tol_;
};

/// w(p) = |T1(p.x) - T2(p.y)|, evaluated from the curves directly.
double weight(const PolygonalCurve &t1, const PolygonalCurve &t2, ParamPoint p);
double weight(const ParameterSpace &space, ParamPoint p);

/// Cell (i, j) pairs T1's segment i with T2's segment j.
std::vector<ParameterCell> build_cells(const PolygonalCurve &t1,
                                       const PolygonalCurve &t2);

struct ParamSegment {
  ParamPoint a;
  ParamPoint b;
};

/// Free-space axes of a cell. The monotone axis is the line y = x + offset
/// through the minimizer of w^2; along it w grows linearly in L1 distance from
/// the center with slope |u - v| / 2 (zero for parallel cells).
struct FreeSpaceAxes {
  ParamPoint center;
  double offset = 0;
  std::optional<ParamSegment> ell;  // clipped to the cell, a <=_xy b
  std::optional<ParamSegment> hbar; // clipped slope -1 axis; none for parallel
  bool hbar_defined = true;
  double slope = 0;
  double center_weight = 0;

  /// Weight at a point of the (unclipped) monotone axis.
  double weight_at(ParamPoint q) const {
    return center_weight + slope * d1(q, center);
  }
  bool on_ell_line(ParamPoint q, double tol) const {
    return std::abs(q.y - q.x - offset) <= tol;
  }
};

/// Throws Error(AntiparallelCell) when c = -1 (no monotone axis exists).
FreeSpaceAxes free_space_axes(const ParameterCell &cell, double tol = 1e-12);

struct EdgeMinimum {
  ParamPoint point;
  double weight = 0;
};

/// Minimizer of w along a parameter edge (point-to-segment projection).
EdgeMinimum edge_min(const ParameterSpace &space, const ParameterEdge &edge);

/// w^2 in cell-local coordinates s = x - x0, t = y - y0:
/// s^2 + t^2 - 2c st + 2 bs s + 2 bt t + k.
struct QuadraticForm {
  double c = 0;
  double bs = 0;
  double bt = 0;
  double k = 0;

  double operator()(double s, double t) const {
    return s * s + t * t - 2.0 * c * s * t + 2.0 * bs * s + 2.0 * bt * t + k;
  }
};

struct Interval {
  double lo = 0;
  double hi = 0;
};

/// {w <= delta} intersected with one cell.
class EllipseSlice {
public:
  EllipseSlice(const ParameterCell &cell, double delta);

  const ParameterCell &cell() const { return cell_; }
  double delta() const { return delta_; }
  const QuadraticForm &form() const { return form_; }

  bool empty() const { return empty_; }
  bool contains(ParamPoint p, double slack = 0.0) const;

  /// Sub-intervals of the bottom, right, top and left cell edges (in global
  /// coordinates along each edge) lying inside the slice.
  const std::array<std::optional<Interval>, 4> &crossings() const {
    return crossings_;
  }

  /// Boundary of the slice as a convex polygon (counter-clockwise).
  std::vector<ParamPoint> outline(int samples = 64) const;

private:
  ParameterCell cell_;
  double delta_;
  QuadraticForm form_;
  std::array<std::optional<Interval>, 4> crossings_;
  bool empty_;
};

inline EllipseSlice ellipse_slice(const ParameterCell &cell, double delta) {
  return EllipseSlice(cell, delta);
}

QuadraticForm weight_form(const ParameterCell &cell);

/// Minimum of w over the closed cell.
double min_weight_in_cell(const ParameterCell &cell);

} // namespace ifd

#endif
