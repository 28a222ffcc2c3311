#ifndef IFD_CURVE_HPP
#define IFD_CURVE_HPP

#include "ifd/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ifd {

/// Planar polyline parametrized by arc length.
///
/// Consecutive duplicate vertices are collapsed at construction, so every
/// segment has positive length and `cum_length()` is strictly increasing.
class PolygonalCurve {
public:
  /// Throws Error(TooFewVertices) when fewer than two distinct points remain
  /// after collapsing duplicates closer than 1e-12 x bounding-box diagonal.
  explicit PolygonalCurve(std::span<const Vec2> points);

  std::span<const Vec2> vertices() const { return vertices_; }
  std::span<const double> cum_length() const { return cum_; }

  std::size_t segment_count() const { return vertices_.size() - 1; }
  double length() const { return cum_.back(); }
  double segment_length(std::size_t i) const { return cum_[i + 1] - cum_[i]; }

  /// Unit direction of segment i.
  Vec2 direction(std::size_t i) const;

  /// Index of the segment containing arc length s; vertices belong to the
  /// segment they start (the last vertex belongs to the last segment).
  std::size_t segment_at(double s) const;

  /// Unit-speed evaluation. s may exceed [0, length] by at most 1e-9, in which
  /// case it is clamped; anything further throws Error(OutOfRange).
  Vec2 point_at(double s) const;

  /// Uniformly scaled copy.
  PolygonalCurve scaled(double factor) const;

private:
  std::vector<Vec2> vertices_;
  std::vector<double> cum_;
};

inline PolygonalCurve build_curve(std::span<const Vec2> points) {
  return PolygonalCurve(points);
}

struct CurveStats {
  double mu = 0.0;   // shortest segment over both curves
  double zeta = 1.0; // longest / shortest segment over both curves
  double len1 = 0.0;
  double len2 = 0.0;
};

/// zeta is taken over all segment pairs of both curves, not only pairs across
/// the two curves, so it bounds the cross-curve ratio from above.
CurveStats stats(const PolygonalCurve &t1, const PolygonalCurve &t2);

} // namespace ifd

#endif
