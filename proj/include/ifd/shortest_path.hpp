#ifndef IFD_SHORTEST_PATH_HPP
#define IFD_SHORTEST_PATH_HPP

#include "ifd/graph.hpp"
#include "ifd/param_space.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace ifd {

struct PathResult {
  double distance = std::numeric_limits<double>::infinity();
  std::vector<VertexId> vertices;
  std::vector<ParamPoint> points;

  bool reachable() const { return std::isfinite(distance); }
};

/// Binary-heap Dijkstra. Ties between equal tentative distances are settled
/// in increasing vertex id. Unreachable targets give distance = infinity and
/// an empty path.
PathResult dijkstra(const MonotoneDigraph &g, VertexId source, VertexId target);

/// O(VE) recomputation used to cross-check dijkstra.
double bellman_ford(const MonotoneDigraph &g, VertexId source, VertexId target);

/// Kahan-summed weight of a vertex path.
double path_weight(const MonotoneDigraph &g, std::span<const VertexId> path);

/// Lattice of P whose lines include every parameter line: each T1 segment of
/// length L is cut into ceil(L / mesh) equal parts, likewise for T2.
struct ParameterGrid {
  std::vector<double> xs;
  std::vector<double> ys;

  std::uint64_t vertex_count() const {
    return static_cast<std::uint64_t>(xs.size()) * ys.size();
  }
};

/// Throws BudgetExceeded when the lattice would have more than max_vertices.
ParameterGrid snapped_grid(const ParameterSpace &space, double mesh,
                           std::uint64_t max_vertices);

/// Splits every lattice interval into `factor` equal parts (vertex superset).
ParameterGrid refine(const ParameterGrid &grid, int factor);

struct OracleResult {
  double value = std::numeric_limits<double>::infinity();
  std::vector<ParamPoint> path; // filled only when requested
};

/// Dynamic program over the lattice in row-major order with right, up and
/// (optionally) in-cell diagonal moves, each weighted by its exact closed
/// form. The result is the weight of an actual monotone path, hence an upper
/// bound on the integral Frechet distance.
OracleResult dense_grid_oracle(const ParameterSpace &space, const ParameterGrid &grid,
                               bool diagonals = true, bool want_path = false);

double dense_grid_oracle(const ParameterSpace &space, double mesh,
                         std::uint64_t max_vertices = 10'000'000);

/// Brute force over the k x k subdivision of the rectangle spanned by a and b
/// inside one cell (right, up and diagonal moves).
OracleResult staircase_cell_oracle(const ParameterSpace &space,
                                   const ParameterCell &cell, ParamPoint a,
                                   ParamPoint b, int k, bool want_path = false);

} // namespace ifd

#endif
