#ifndef IFD_CELL_PATHS_HPP
#define IFD_CELL_PATHS_HPP

#include "ifd/param_space.hpp"

#include <span>
#include <vector>

namespace ifd {

enum class CellPathBranch { ThroughAxis, AroundCorner, DegenerateFallback };

struct CellPath {
  std::vector<ParamPoint> vertices;
  CellPathBranch branch = CellPathBranch::ThroughAxis;
  double weighted_length = 0.0;
};

/// Shortest weighted monotone path between a <=_xy b inside one cell.
///
/// If the monotone axis meets the rectangle R(a, b) the path runs
/// a -> c1 -> c2 -> b with c1c2 the piece of the axis inside R; otherwise it
/// bends at the corner of R nearest the axis (top-left when the axis lies
/// above R, bottom-right when below). Throws Error(AntiparallelCell).
CellPath cell_shortest_path(const ParameterSpace &space, const ParameterCell &cell,
                            ParamPoint a, ParamPoint b);

/// As cell_shortest_path, but antiparallel cells fall back to the staircase
/// lattice oracle with k = 256 (branch DegenerateFallback).
CellPath cell_path_or_fallback(const ParameterSpace &space,
                               const ParameterCell &cell, ParamPoint a,
                               ParamPoint b);

/// Shortest path from o on the axis of `from` to p on the axis of `to`, the
/// two cells sharing an edge (to is the right or upper neighbour). When both
/// axes reach the shared edge in order the path is [o, c_o, c_p, p];
/// otherwise the crossing point is found by a 65-point scan refined with
/// golden-section search.
CellPath two_cell_path(const ParameterSpace &space, const ParameterCell &from,
                       const ParameterCell &to, ParamPoint o, ParamPoint p);

/// delta -> L1 length of {q on the path : w(q) <= delta}, for an in-cell
/// polyline. Exact per straight piece: on a piece w^2 = z^2 + h^2 with z
/// affine in the piece parameter.
class SimilarityProfile {
public:
  struct Piece {
    double z0 = 0, z1 = 0; // leash component along the relative velocity
    double h = 0;          // perpendicular component (constant on the piece)
    double l1 = 0;         // L1 length of the piece
    double w_const = 0;    // weight when z0 == z1 (no relative motion)
  };

  explicit SimilarityProfile(std::vector<Piece> pieces);

  double operator()(double delta) const;
  double total_length() const;

  /// Sorted weights where the profile changes formula: the minimum and
  /// endpoint weights of every piece.
  std::vector<double> breakpoints() const;

  std::span<const Piece> pieces() const { return pieces_; }

private:
  std::vector<Piece> pieces_;
};

SimilarityProfile partial_similarity_profile(const ParameterSpace &space,
                                             const ParameterCell &cell,
                                             std::span<const ParamPoint> path);

} // namespace ifd

#endif
