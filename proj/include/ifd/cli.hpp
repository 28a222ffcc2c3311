#ifndef IFD_CLI_HPP
#define IFD_CLI_HPP

#include "ifd/approx_graphs.hpp"
#include "ifd/curve.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ifd {

/// `{"vertices": [[x, y], ...]}`. Throws Error(ParseError).
std::vector<Vec2> parse_curve_json(const std::string &text);

/// One `x,y` pair per line; blank lines, `#` comments and an `x,y` header
/// are skipped. Throws Error(ParseError).
std::vector<Vec2> parse_curve_csv(const std::string &text);

/// Reads a curve file, choosing the format by its first non-blank character.
PolygonalCurve read_curve(const std::string &path);

/// Path points from `{"path": [[x, y], ...]}` (a Report works) or a bare
/// array of pairs.
std::vector<ParamPoint> parse_path_json(const std::string &text);

struct SvgOverlays {
  bool axes = true;
  std::vector<double> deltas;       // ellipse slices per cell
  std::vector<ParamPoint> path;     // empty: no path layer
  std::vector<ParamSegment> balls;  // grid-ball squares, corner to corner
};

/// Free-space diagram of the parameter space. Output depends only on the
/// inputs.
std::string render_svg(const ParameterSpace &space, const SvgOverlays &overlays);

/// Squares of the grid balls G2 would place, clipped to the parameter space.
std::vector<ParamSegment> grid_ball_outlines(const ParameterSpace &space,
                                             const GraphConfig &cfg);

nlohmann::ordered_json make_report(const ParameterSpace &space, const GraphConfig &cfg,
                                   const FrechetResult &result, double runtime_ms);

/// Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 numeric error.
int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int cli_main(int argc, char **argv);

} // namespace ifd

#endif
