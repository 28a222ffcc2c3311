#include "ifd/cli.hpp"

#include "ifd/errors.hpp"
#include "ifd/matching.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ifd {

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

std::vector<Vec2> pairs_from_json(const nlohmann::json &arr, const char *what) {
  if (!arr.is_array())
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of [x, y] pairs");
  std::vector<Vec2> out;
  for (const auto &p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw Error(ErrorCode::ParseError, std::string(what) + " entries must be [x, y] numbers");
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

nlohmann::json parse_json(const std::string &text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double &out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v))
    return v;
  return nullptr;
}

nlohmann::ordered_json path_json(std::span<const ParamPoint> path) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ParamPoint &p : path)
    arr.push_back({p.x, p.y});
  return arr;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::TooFewVertices:
  case ErrorCode::InvalidArgument:
  case ErrorCode::NotMonotone:
  case ErrorCode::ParseError:
  case ErrorCode::IoError:
    return 2;
  case ErrorCode::BudgetExceeded:
  case ErrorCode::NoFeasibleGraph:
  case ErrorCode::Disconnected:
    return 3;
  default:
    return 4;
  }
}

} // namespace

std::vector<Vec2> parse_curve_json(const std::string &text) {
  const nlohmann::json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("vertices"))
    throw Error(ErrorCode::ParseError, "curve JSON needs a \"vertices\" array");
  return pairs_from_json(doc["vertices"], "vertices");
}

std::vector<Vec2> parse_curve_csv(const std::string &text) {
  std::vector<Vec2> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#')
      continue;
    const auto comma = s.find(',');
    Vec2 p;
    if (comma == std::string_view::npos || !parse_double(s.substr(0, comma), p.x) ||
        !parse_double(s.substr(comma + 1), p.y)) {
      if (out.empty() && s == "x,y")
        continue;
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": expected 'x,y'");
    }
    out.push_back(p);
  }
  return out;
}

PolygonalCurve read_curve(const std::string &path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return PolygonalCurve(parse_curve_json(text));
  return PolygonalCurve(parse_curve_csv(text));
}

std::vector<ParamPoint> parse_path_json(const std::string &text) {
  const nlohmann::json doc = parse_json(text);
  const nlohmann::json &arr = doc.is_object() && doc.contains("path") ? doc["path"] : doc;
  std::vector<ParamPoint> out;
  for (const Vec2 &v : pairs_from_json(arr, "path"))
    out.push_back({v.x, v.y});
  return out;
}

std::vector<ParamSegment> grid_ball_outlines(const ParameterSpace &space,
                                             const GraphConfig &cfg) {
  std::vector<ParamSegment> out;
  for (const ParameterEdge &e : space.edges()) {
    const EdgeMinimum m = edge_min(space, e);
    if (m.weight < 1e-12)
      continue;
    const double r = cfg.c_radius * m.weight;
    out.push_back({{std::max(0.0, m.point.x - r), std::max(0.0, m.point.y - r)},
                   {std::min(space.width(), m.point.x + r),
                    std::min(space.height(), m.point.y + r)}});
  }
  return out;
}

std::string render_svg(const ParameterSpace &space, const SvgOverlays &overlays) {
  const double W = space.width(), H = space.height();
  const double scale = 800.0 / std::max(W, H);
  const double margin = 20.0;
  auto px = [&](double x) { return fmt6(margin + x * scale); };
  auto py = [&](double y) { return fmt6(margin + (H - y) * scale); };
  auto pt = [&](ParamPoint p) { return px(p.x) + "," + py(p.y); };

  std::ostringstream svg;
  const std::string w = fmt6(2 * margin + W * scale), h = fmt6(2 * margin + H * scale);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";

  svg << "<g id=\"cells\" stroke=\"#888888\" stroke-width=\"1\" fill=\"none\">\n";
  for (double x : space.xs())
    svg << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\""
        << py(H) << "\"/>\n";
  for (double y : space.ys())
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(W) << "\" y2=\""
        << py(y) << "\"/>\n";
  svg << "</g>\n";

  if (overlays.axes) {
    svg << "<g id=\"axes\" stroke=\"#1f77b4\" stroke-width=\"1.5\">\n";
    for (const ParameterCell &cell : space.cells()) {
      if (cell.degeneracy == Degeneracy::Antiparallel)
        continue;
      const FreeSpaceAxes axes = free_space_axes(cell);
      if (axes.ell)
        svg << "<line x1=\"" << px(axes.ell->a.x) << "\" y1=\"" << py(axes.ell->a.y)
            << "\" x2=\"" << px(axes.ell->b.x) << "\" y2=\"" << py(axes.ell->b.y) << "\"/>\n";
    }
    svg << "</g>\n";
  }

  if (!overlays.deltas.empty()) {
    svg << "<g id=\"ellipses\" stroke=\"#2ca02c\" fill=\"#2ca02c\" fill-opacity=\"0.15\">\n";
    for (double delta : overlays.deltas)
      for (const ParameterCell &cell : space.cells()) {
        const auto poly = EllipseSlice(cell, delta).outline(64);
        if (poly.size() < 3)
          continue;
        svg << "<polygon data-delta=\"" << fmt6(delta) << "\" points=\"";
        for (std::size_t k = 0; k < poly.size(); ++k)
          svg << (k ? " " : "") << pt(poly[k]);
        svg << "\"/>\n";
      }
    svg << "</g>\n";
  }

  if (!overlays.path.empty()) {
    svg << "<g id=\"path\" stroke=\"#d62728\" stroke-width=\"2\" fill=\"none\">\n<polyline points=\"";
    for (std::size_t k = 0; k < overlays.path.size(); ++k)
      svg << (k ? " " : "") << pt(overlays.path[k]);
    svg << "\"/>\n</g>\n";
  }

  if (!overlays.balls.empty()) {
    svg << "<g id=\"balls\" stroke=\"#9467bd\" stroke-dasharray=\"4 2\" fill=\"none\">\n";
    for (const ParamSegment &b : overlays.balls)
      svg << "<rect x=\"" << px(b.a.x) << "\" y=\"" << py(b.b.y) << "\" width=\""
          << fmt6((b.b.x - b.a.x) * scale) << "\" height=\"" << fmt6((b.b.y - b.a.y) * scale)
          << "\"/>\n";
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

nlohmann::ordered_json make_report(const ParameterSpace &space, const GraphConfig &cfg,
                                   const FrechetResult &result, double runtime_ms) {
  nlohmann::ordered_json r;
  r["integral"] = result.value;
  r["average"] = result.average;
  r["winning_mode"] = to_string(result.winning_mode);
  r["path"] = path_json(result.path);
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  for (const GraphStats &g : result.graphs) {
    nlohmann::ordered_json s;
    s["built"] = g.built;
    s["vertices"] = g.vertices;
    s["edges"] = g.edges;
    s["distance"] = number_or_null(g.distance);
    if (!g.built)
      s["projected_vertices"] = g.projected_vertices;
    if (!g.note.empty())
      s["note"] = g.note;
    stats[g.graph] = s;
  }
  r["graph_stats"] = stats;
  nlohmann::ordered_json c;
  c["epsilon"] = cfg.epsilon;
  c["mode"] = to_string(cfg.mode);
  c["c_g1"] = cfg.c_g1;
  c["c_radius"] = cfg.c_radius;
  c["c_mesh"] = cfg.c_mesh;
  c["max_vertices"] = cfg.max_vertices;
  c["len1"] = space.width();
  c["len2"] = space.height();
  r["config"] = c;
  r["runtime_ms"] = runtime_ms;
  return r;
}

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Approximate integral and average Frechet distance of polygonal curves", "ifd"};
  app.require_subcommand(1);
  CLI::App *compute = app.add_subcommand("compute", "Compute the distance of two curves");

  std::string a_file, b_file, mode_name = "both", out_file, svg_file, matching_file;
  double epsilon = 0;
  GraphConfig cfg;
  std::vector<double> deltas;
  bool paper = false;
  compute->add_option("--a", a_file, "First curve (JSON or CSV)")->required();
  compute->add_option("--b", b_file, "Second curve (JSON or CSV)")->required();
  compute->add_option("--epsilon", epsilon, "Approximation parameter")->required()
      ->check(CLI::PositiveNumber);
  compute->add_option("--mode", mode_name, "g1, g2, both or oracle")
      ->check(CLI::IsMember({"g1", "g2", "both", "oracle"}));
  auto *c_g1 = compute->add_option("--c-g1", cfg.c_g1, "G1 mesh constant")->check(CLI::PositiveNumber);
  auto *c_radius = compute->add_option("--c-radius", cfg.c_radius, "Grid ball radius factor")
                       ->check(CLI::PositiveNumber);
  auto *c_mesh = compute->add_option("--c-mesh", cfg.c_mesh, "Grid ball mesh divisor")
                     ->check(CLI::PositiveNumber);
  compute->add_option("--max-vertices", cfg.max_vertices, "Vertex budget per graph")
      ->check(CLI::PositiveNumber);
  compute->add_flag("--paper-constants", paper, "Use c_g1=40000, c_radius=62, c_mesh=456");
  compute->add_option("--out", out_file, "Write the JSON report here instead of stdout");
  compute->add_option("--svg", svg_file, "Write a free-space diagram");
  compute->add_option("--delta", deltas, "Leash bounds for ellipse slices and partial similarity")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--optimize-matching", matching_file,
                      "Locally optimize the path in this JSON file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (paper) {
      const GraphConfig p = GraphConfig::paper(epsilon);
      if (!c_g1->count()) cfg.c_g1 = p.c_g1;
      if (!c_radius->count()) cfg.c_radius = p.c_radius;
      if (!c_mesh->count()) cfg.c_mesh = p.c_mesh;
    }
    cfg.epsilon = epsilon;
    cfg.mode = parse_mode(mode_name);
    cfg.validate();

    const ParameterSpace space(read_curve(a_file), read_curve(b_file));
    std::vector<ParamPoint> input_path;
    if (!matching_file.empty())
      input_path = parse_path_json(read_file(matching_file));

    const auto t0 = std::chrono::steady_clock::now();
    const FrechetResult result = approximate_integral_frechet(space, cfg);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    nlohmann::ordered_json report = make_report(space, cfg, result, ms);
    const MonotonePath path = MonotonePath::from_points(space, result.path);
    if (!deltas.empty()) {
      const SimilarityProfile profile = path_similarity_profile(space, path);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (double d : deltas)
        arr.push_back({{"delta", d}, {"matched_length", profile(d)}});
      report["partial_similarity"] = arr;
    }
    if (!matching_file.empty()) {
      const MonotonePath in = MonotonePath::from_points(space, input_path);
      const MonotonePath opt = locally_optimize(space, in);
      nlohmann::ordered_json m;
      m["input_cost"] = matching_cost(space, in);
      m["output_cost"] = matching_cost(space, opt);
      m["input_max_leash"] = max_leash(space, in);
      m["output_max_leash"] = max_leash(space, opt);
      m["path"] = path_json(opt.vertices());
      report["optimized_matching"] = m;
    }

    const std::string text = report.dump(2) + "\n";
    if (out_file.empty())
      out << text;
    else
      write_file(out_file, text);

    if (!svg_file.empty()) {
      SvgOverlays ov;
      ov.deltas = deltas;
      ov.path = result.path;
      if (cfg.mode == Mode::G2 || cfg.mode == Mode::Both)
        ov.balls = grid_ball_outlines(space, cfg);
      write_file(svg_file, render_svg(space, ov));
    }
    return 0;
  } catch (const BudgetExceeded &e) {
    err << "error: " << e.what() << " (projected vertices: " << e.projected_vertices() << ")\n";
    return 3;
  } catch (const Error &e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

int cli_main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

} // namespace ifd
