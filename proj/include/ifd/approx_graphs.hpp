#ifndef IFD_APPROX_GRAPHS_HPP
#define IFD_APPROX_GRAPHS_HPP

#include "ifd/graph.hpp"
#include "ifd/param_space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ifd {

enum class Mode { G1, G2, Both, Oracle };

const char *to_string(Mode mode);
Mode parse_mode(const std::string &name);

struct GraphConfig {
  double epsilon = 0.25;
  double c_g1 = 40.0;
  double c_radius = 62.0;
  double c_mesh = 8.0;
  std::uint64_t max_vertices = 1'000'000;
  Mode mode = Mode::Both;

  /// Constants small enough to run on a desk machine.
  static GraphConfig desk(double epsilon);
  /// The worst-case constants under which the (1+eps) guarantee is proven.
  static GraphConfig paper(double epsilon);

  /// Throws Error(InvalidArgument) on non-positive parameters.
  void validate() const;
};

/// sigma = eps * mu / (c_g1 * (|T1| + |T2|)).
double g1_mesh(const ParameterSpace &space, const GraphConfig &cfg);

/// Uniform right/up grid graph with spacing <= mesh, snapped to the
/// parameter lines.
MonotoneDigraph build_g1(const ParameterSpace &space, double mesh,
                         std::uint64_t max_vertices);
MonotoneDigraph build_g1(const ParameterSpace &space, const GraphConfig &cfg);

/// Axis-aligned segment: y = fixed over x in [lo, hi] when horizontal,
/// x = fixed over y in [lo, hi] when vertical.
struct LatticeSegment {
  bool vertical = false;
  double fixed = 0;
  double lo = 0, hi = 0;
};

/// Lines u + (2i - k)/k * r (k = ceil(2r/m)) in each direction over the
/// square [u - r, u + r], clipped to [0, width] x [0, height]. Lines outside
/// the clip box are dropped.
std::vector<LatticeSegment> build_grid_ball(ParamPoint u, double r, double m,
                                            double width, double height);

/// Grid ball of radius c_radius * w(u) and mesh eps * w(u) / c_mesh. Throws
/// Error(DegenerateBall) when w(u) < 1e-12.
std::vector<LatticeSegment> build_grid_ball(const ParameterSpace &space,
                                            ParamPoint u,
                                            const GraphConfig &cfg);

/// Arrangement of the monotone axes, the grid balls at every edge minimizer
/// and the terminal connectors.
MonotoneDigraph build_g2(const ParameterSpace &space, const GraphConfig &cfg);

/// Vertex count build_g2 would need, without building. Throws
/// BudgetExceeded when a single grid ball already needs more than line_cap
/// vertices.
std::uint64_t g2_projected_vertices(const ParameterSpace &space, const GraphConfig &cfg,
                                    std::uint64_t line_cap = 100'000'000);

struct GraphStats {
  std::string graph; // "g1", "g2" or "oracle"
  bool built = false;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double distance = 0; // infinity when s and t are disconnected
  std::uint64_t projected_vertices = 0; // set when the budget was exceeded
  std::string note;
};

struct FrechetResult {
  double value = 0;
  double average = 0;
  Mode winning_mode = Mode::G1;
  std::vector<ParamPoint> path;
  std::vector<GraphStats> graphs;
};

/// Builds the graphs requested by cfg.mode and returns the cheapest s-t path.
/// Every value returned is the cost of a real monotone matching.
FrechetResult approximate_integral_frechet(const ParameterSpace &space,
                                           const GraphConfig &cfg);

} // namespace ifd

#endif
