#include "ifd/matching.hpp"

#include "ifd/cell_paths.hpp"
#include "ifd/integrals.hpp"

#include <algorithm>

namespace ifd {

double matching_cost(const ParameterSpace &space, const MonotonePath &path) {
  const auto pts = path.vertices();
  double sum = 0.0, comp = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double y = weighted_length(space, pts[k], pts[k + 1]) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

ParamPoint evaluate_matching(const MonotonePath &path, double t) {
  return path.at(t);
}

namespace {

// One substitution pass. A piece lying on the boundary of the current
// group's cell stays in that group, so runs along a parameter line are never
// split off into a neighbour.
std::vector<ParamPoint> optimize_pass(const ParameterSpace &space,
                                      std::span<const ParamPoint> pts) {
  std::vector<WeightedSegment> pieces;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k] == pts[k + 1])
      continue;
    for (const WeightedSegment &s : split_at_parameter_lines(space, pts[k], pts[k + 1]))
      pieces.push_back(s);
  }

  const double tol = 1e-12 * std::max({1.0, space.width(), space.height()});
  std::vector<ParamPoint> out{pts.front()};
  for (std::size_t g = 0; g < pieces.size();) {
    const ParameterCell &cell = space.cell(pieces[g].col, pieces[g].row);
    std::size_t h = g;
    while (h + 1 < pieces.size() &&
           ((pieces[h + 1].col == cell.col && pieces[h + 1].row == cell.row) ||
            (cell.contains(pieces[h + 1].a, tol) && cell.contains(pieces[h + 1].b, tol))))
      ++h;
    if (cell.degeneracy == Degeneracy::Antiparallel) {
      for (std::size_t k = g; k <= h; ++k)
        out.push_back(pieces[k].b);
    } else {
      const CellPath cp = cell_shortest_path(space, cell, pieces[g].a, pieces[h].b);
      out.insert(out.end(), cp.vertices.begin() + 1, cp.vertices.end());
    }
    g = h + 1;
  }
  return simplify_polyline(out, 0.0);
}

} // namespace

MonotonePath locally_optimize(const ParameterSpace &space, const MonotonePath &path,
                              int max_passes) {
  std::vector<ParamPoint> cur(path.vertices().begin(), path.vertices().end());
  for (int pass = 0; pass < max_passes; ++pass) {
    std::vector<ParamPoint> next = optimize_pass(space, cur);
    const bool same = next == cur;
    cur = std::move(next);
    if (same)
      break;
  }
  return MonotonePath::from_points(space, std::move(cur));
}

SimilarityProfile path_similarity_profile(const ParameterSpace &space,
                                          const MonotonePath &path) {
  std::vector<SimilarityProfile::Piece> pieces;
  const auto pts = path.vertices();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    for (const WeightedSegment &s : split_at_parameter_lines(space, pts[k], pts[k + 1])) {
      const ParamPoint seg[2] = {s.a, s.b};
      const SimilarityProfile p =
          partial_similarity_profile(space, space.cell(s.col, s.row), seg);
      pieces.insert(pieces.end(), p.pieces().begin(), p.pieces().end());
    }
  return SimilarityProfile(std::move(pieces));
}

double max_leash(const ParameterSpace &space, const MonotonePath &path) {
  // w^2 is convex along every in-cell piece, so the maximum sits at a piece
  // endpoint
  const auto pts = path.vertices();
  double best = weight(space, pts.front());
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    for (const WeightedSegment &s : split_at_parameter_lines(space, pts[k], pts[k + 1])) {
      const ParameterCell &cell = space.cell(s.col, s.row);
      best = std::max({best, cell.weight(s.a), cell.weight(s.b)});
    }
  return best;
}

} // namespace ifd
