#ifndef IFD_INTEGRALS_HPP
#define IFD_INTEGRALS_HPP

#include "ifd/param_space.hpp"

#include <vector>

namespace ifd {

enum class SegmentKind { AxisAligned, OnAxis, General };

/// Straight parameter-space segment lying in a single cell.
struct WeightedSegment {
  ParamPoint a;
  ParamPoint b;
  SegmentKind kind = SegmentKind::General;
  std::size_t col = 0;
  std::size_t row = 0;
};

/// Splits ab at every parameter line it crosses. Pieces are ordered from a to
/// b, each lies in exactly one cell, and axis-aligned pieces are tagged as
/// such (everything else is General).
std::vector<WeightedSegment> split_at_parameter_lines(const ParameterSpace &space,
                                                      ParamPoint a, ParamPoint b);

/// Integral of sqrt(z^2 + h^2) over [z0, z1], evaluated without cancellation.
double sqrt_hyp_integral(double z0, double z1, double h);

/// Integral over [0,1] of sqrt(A t^2 + B t + C). Throws
/// Error(NegativeRadicand) when the quadratic dips below -1e-9 on [0,1].
double sqrt_quadratic_integral(double a, double b, double c);

/// Weighted length of a horizontal or vertical in-cell segment via the arsinh
/// antiderivative.
double weighted_length_axis_aligned(const ParameterSpace &space,
                                    const WeightedSegment &seg);

/// Weighted length of a piece of the cell's monotone axis; w is linear on
/// each side of the axis center, so the trapezoid rule is exact. Throws
/// Error(NotOnAxis) when an endpoint is more than 1e-9 off the axis.
double weighted_length_on_axis(const ParameterSpace &space,
                               const WeightedSegment &seg);

/// Weighted length of any straight in-cell segment (closed form).
double weighted_length_general(const ParameterSpace &space,
                               const WeightedSegment &seg);

/// Dispatches on the segment kind.
double weighted_length(const ParameterSpace &space, const WeightedSegment &seg);

/// Weighted length of an arbitrary straight segment of P (split + closed forms).
double weighted_length(const ParameterSpace &space, ParamPoint a, ParamPoint b);

/// Adaptive Simpson on w evaluated from the curves, split at parameter lines.
/// Throws Error(NonConvergence) beyond recursion depth 60.
double quadrature_weighted_length(const ParameterSpace &space, ParamPoint a,
                                  ParamPoint b, double rel_tol = 1e-12);

} // namespace ifd

#endif
