#ifndef IFD_PATH_HPP
#define IFD_PATH_HPP

#include "ifd/param_space.hpp"

#include <span>
#include <vector>

namespace ifd {

/// xy-monotone polyline from (0,0) to (|T1|,|T2|); as a matching its two
/// coordinate projections are the reparametrizations of T1 and T2.
class MonotonePath {
public:
  /// Backward steps up to `tol` (relative to the size of P) are clamped, as
  /// are endpoints within `tol` of the corners of P. Anything else throws
  /// Error(NotMonotone).
  static MonotonePath from_points(const ParameterSpace &space,
                                  std::vector<ParamPoint> points,
                                  double tol = 1e-9);

  std::span<const ParamPoint> vertices() const { return points_; }
  std::span<const double> cum_l1() const { return cum_; }
  double l1_length() const { return cum_.back(); }

  /// Point at L1 arc-length fraction t in [0, 1].
  ParamPoint at(double t) const;

private:
  std::vector<ParamPoint> points_;
  std::vector<double> cum_;
};

/// Drops repeated points and interior vertices collinear with their
/// neighbours.
std::vector<ParamPoint> simplify_polyline(std::span<const ParamPoint> pts,
                                          double tol);

} // namespace ifd

#endif
