#include "ifd/shortest_path.hpp"

#include "ifd/errors.hpp"
#include "ifd/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

namespace ifd {

PathResult dijkstra(const MonotoneDigraph &g, VertexId source, VertexId target) {
  const std::size_t n = g.vertex_count();
  if (source >= n || target >= n)
    throw Error(ErrorCode::InvalidArgument, "dijkstra: terminal out of range");
  const auto offsets = g.offsets();
  const auto out = g.out_edges();
  const auto edges = g.edges();
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<VertexId> parent(n, kNone);
  std::vector<bool> done(n, false);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (done[v])
      continue;
    done[v] = true;
    if (v == target)
      break;
    for (std::uint32_t k = offsets[v]; k < offsets[v + 1]; ++k) {
      const GraphEdge &e = edges[out[k]];
      if (done[e.head])
        continue;
      const double nd = d + e.weight;
      if (nd < dist[e.head] || (nd == dist[e.head] && v < parent[e.head])) {
        dist[e.head] = nd;
        parent[e.head] = v;
        heap.push({nd, e.head});
      }
    }
  }

  PathResult result;
  if (!std::isfinite(dist[target]))
    return result;
  result.distance = dist[target];
  for (VertexId v = target; v != kNone; v = parent[v]) {
    result.vertices.push_back(v);
    if (v == source)
      break;
  }
  std::reverse(result.vertices.begin(), result.vertices.end());
  result.points.reserve(result.vertices.size());
  for (VertexId v : result.vertices)
    result.points.push_back(g.point(v));
  return result;
}

double bellman_ford(const MonotoneDigraph &g, VertexId source, VertexId target) {
  const std::size_t n = g.vertex_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  dist[source] = 0.0;
  for (std::size_t round = 0; round + 1 < std::max<std::size_t>(n, 2); ++round) {
    bool changed = false;
    for (const GraphEdge &e : g.edges()) {
      if (dist[e.tail] + e.weight < dist[e.head]) {
        dist[e.head] = dist[e.tail] + e.weight;
        changed = true;
      }
    }
    if (!changed)
      break;
  }
  return dist[target];
}

double path_weight(const MonotoneDigraph &g, std::span<const VertexId> path) {
  // Kahan summation: paths can have millions of tiny edges.
  double sum = 0.0, comp = 0.0;
  const auto offsets = g.offsets();
  const auto out = g.out_edges();
  const auto edges = g.edges();
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t e = offsets[path[k]]; e < offsets[path[k] + 1]; ++e)
      if (edges[out[e]].head == path[k + 1])
        best = std::min(best, edges[out[e]].weight);
    if (!std::isfinite(best))
      throw Error(ErrorCode::InvalidArgument, "path uses a missing edge");
    const double y = best - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

namespace {

std::vector<double> subdivide(std::span<const double> lines, double mesh) {
  std::vector<double> out{lines.front()};
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    const double len = lines[i + 1] - lines[i];
    const auto parts = static_cast<std::size_t>(
        std::max(1.0, std::ceil(len / mesh * (1.0 - 1e-12))));
    for (std::size_t k = 1; k < parts; ++k)
      out.push_back(lines[i] + len * static_cast<double>(k) / static_cast<double>(parts));
    out.push_back(lines[i + 1]);
  }
  return out;
}

double projected_lines(std::span<const double> lines, double mesh) {
  double count = 1.0;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i)
    count += std::max(1.0, std::ceil((lines[i + 1] - lines[i]) / mesh * (1.0 - 1e-12)));
  return count;
}

// Cell index for each lattice interval.
std::vector<std::size_t> interval_cells(const PolygonalCurve &curve,
                                        std::span<const double> coords) {
  std::vector<std::size_t> out(coords.size() > 0 ? coords.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < coords.size(); ++i)
    out[i] = curve.segment_at(0.5 * (coords[i] + coords[i + 1]));
  return out;
}

// Shared DP over a rectangular lattice. `cell_of(i, j)` gives the cell that
// owns lattice square (i, j).
OracleResult lattice_dp(const ParameterSpace &space, std::span<const double> xs,
                        std::span<const double> ys,
                        const std::function<const ParameterCell &(std::size_t, std::size_t)> &cell_of,
                        bool diagonals, bool want_path) {
  const std::size_t nx = xs.size(), ny = ys.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(nx, inf), cur(nx, inf);
  // 0 = start, 1 = from left, 2 = from below, 3 = diagonal
  std::vector<std::uint8_t> from;
  if (want_path)
    from.assign(nx * ny, 0);

  auto seg = [&](ParamPoint a, ParamPoint b, std::size_t ci, std::size_t cj,
                 SegmentKind kind) {
    const ParameterCell &cell = cell_of(ci, cj);
    return weighted_length(space, WeightedSegment{a, b, kind, cell.col, cell.row});
  };

  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      if (i == 0 && j == 0) {
        cur[0] = 0.0;
        continue;
      }
      const ParamPoint here{xs[i], ys[j]};
      double best = inf;
      std::uint8_t how = 0;
      const std::size_t cj_row = j == 0 ? 0 : j - 1;
      if (i > 0) {
        const double c = cur[i - 1] + seg({xs[i - 1], ys[j]}, here, i - 1,
                                          std::min(j, ny >= 2 ? ny - 2 : 0),
                                          SegmentKind::AxisAligned);
        if (c < best) { best = c; how = 1; }
      }
      if (j > 0) {
        const double c = prev[i] + seg({xs[i], ys[j - 1]}, here,
                                       std::min(i, nx >= 2 ? nx - 2 : 0), cj_row,
                                       SegmentKind::AxisAligned);
        if (c < best) { best = c; how = 2; }
      }
      if (diagonals && i > 0 && j > 0) {
        const double c = prev[i - 1] + seg({xs[i - 1], ys[j - 1]}, here, i - 1,
                                           j - 1, SegmentKind::General);
        if (c < best) { best = c; how = 3; }
      }
      cur[i] = best;
      if (want_path)
        from[j * nx + i] = how;
    }
    std::swap(prev, cur);
  }

  OracleResult result;
  result.value = prev[nx - 1];
  if (want_path) {
    std::size_t i = nx - 1, j = ny - 1;
    result.path.push_back({xs[i], ys[j]});
    while (i > 0 || j > 0) {
      switch (from[j * nx + i]) {
      case 1: --i; break;
      case 2: --j; break;
      case 3: --i; --j; break;
      default:
        throw Error(ErrorCode::InvalidArgument, "lattice path reconstruction failed");
      }
      result.path.push_back({xs[i], ys[j]});
    }
    std::reverse(result.path.begin(), result.path.end());
  }
  return result;
}

} // namespace

ParameterGrid snapped_grid(const ParameterSpace &space, double mesh,
                           std::uint64_t max_vertices) {
  if (!(mesh > 0.0))
    throw Error(ErrorCode::InvalidArgument, "grid mesh must be positive");
  const double projected = projected_lines(space.xs(), mesh) * projected_lines(space.ys(), mesh);
  if (projected > static_cast<double>(max_vertices))
    throw BudgetExceeded("grid", static_cast<std::uint64_t>(std::min(projected, 1.8e19)),
                         max_vertices);
  return {subdivide(space.xs(), mesh), subdivide(space.ys(), mesh)};
}

ParameterGrid refine(const ParameterGrid &grid, int factor) {
  auto split = [factor](const std::vector<double> &v) {
    std::vector<double> out{v.front()};
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      for (int k = 1; k < factor; ++k)
        out.push_back(v[i] + (v[i + 1] - v[i]) * k / factor);
      out.push_back(v[i + 1]);
    }
    return out;
  };
  return {split(grid.xs), split(grid.ys)};
}

OracleResult dense_grid_oracle(const ParameterSpace &space, const ParameterGrid &grid,
                               bool diagonals, bool want_path) {
  const auto col = interval_cells(space.first(), grid.xs);
  const auto row = interval_cells(space.second(), grid.ys);
  return lattice_dp(
      space, grid.xs, grid.ys,
      [&](std::size_t i, std::size_t j) -> const ParameterCell & {
        return space.cell(col[i], row[j]);
      },
      diagonals, want_path);
}

double dense_grid_oracle(const ParameterSpace &space, double mesh,
                         std::uint64_t max_vertices) {
  return dense_grid_oracle(space, snapped_grid(space, mesh, max_vertices)).value;
}

OracleResult staircase_cell_oracle(const ParameterSpace &space,
                                   const ParameterCell &cell, ParamPoint a,
                                   ParamPoint b, int k, bool want_path) {
  if (k < 2)
    throw Error(ErrorCode::InvalidArgument, "staircase oracle needs k >= 2");
  const double tol = 1e-9 * std::max({1.0, cell.width(), cell.height()});
  if (!cell.contains(a, tol) || !cell.contains(b, tol) || !leq_xy(a, b, tol))
    throw Error(ErrorCode::InvalidArgument,
                "staircase oracle needs a <=_xy b inside the cell");
  b = {std::max(a.x, b.x), std::max(a.y, b.y)};
  auto axis = [k](double lo, double hi) {
    std::vector<double> v{lo};
    if (hi > lo) {
      for (int s = 1; s < k; ++s)
        v.push_back(lo + (hi - lo) * s / k);
      v.push_back(hi);
    }
    return v;
  };
  const auto xs = axis(a.x, b.x);
  const auto ys = axis(a.y, b.y);
  return lattice_dp(
      space, xs, ys,
      [&](std::size_t, std::size_t) -> const ParameterCell & { return cell; },
      true, want_path);
}

} // namespace ifd
