#include "ifd/approx_graphs.hpp"

#include "ifd/errors.hpp"
#include "ifd/integrals.hpp"
#include "ifd/path.hpp"
#include "ifd/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>

namespace ifd {

const char *to_string(Mode mode) {
  switch (mode) {
  case Mode::G1: return "g1";
  case Mode::G2: return "g2";
  case Mode::Both: return "both";
  case Mode::Oracle: return "oracle";
  }
  return "?";
}

Mode parse_mode(const std::string &name) {
  if (name == "g1") return Mode::G1;
  if (name == "g2") return Mode::G2;
  if (name == "both") return Mode::Both;
  if (name == "oracle") return Mode::Oracle;
  throw Error(ErrorCode::InvalidArgument, "unknown mode '" + name + "'");
}

GraphConfig GraphConfig::desk(double epsilon) {
  GraphConfig cfg;
  cfg.epsilon = epsilon;
  return cfg;
}

GraphConfig GraphConfig::paper(double epsilon) {
  GraphConfig cfg;
  cfg.epsilon = epsilon;
  cfg.c_g1 = 40000.0;
  cfg.c_radius = 62.0;
  cfg.c_mesh = 456.0;
  return cfg;
}

void GraphConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(epsilon))
    throw Error(ErrorCode::InvalidArgument, "epsilon must be > 0");
  if (!positive(c_g1) || !positive(c_radius) || !positive(c_mesh))
    throw Error(ErrorCode::InvalidArgument, "graph constants must be > 0");
  if (max_vertices == 0)
    throw Error(ErrorCode::InvalidArgument, "vertex budget must be > 0");
}

double g1_mesh(const ParameterSpace &space, const GraphConfig &cfg) {
  const CurveStats st = stats(space.first(), space.second());
  return cfg.epsilon * st.mu / (cfg.c_g1 * (st.len1 + st.len2));
}

namespace {

// Segment of the curve owning each lattice interval.
std::vector<std::size_t> owners(const PolygonalCurve &curve,
                                const std::vector<double> &coords) {
  std::vector<std::size_t> out(coords.size() - 1);
  for (std::size_t i = 0; i + 1 < coords.size(); ++i)
    out[i] = curve.segment_at(0.5 * (coords[i] + coords[i + 1]));
  return out;
}

} // namespace

MonotoneDigraph build_g1(const ParameterSpace &space, double mesh,
                         std::uint64_t max_vertices) {
  ParameterGrid grid;
  try {
    grid = snapped_grid(space, mesh, max_vertices);
  } catch (const BudgetExceeded &e) {
    throw BudgetExceeded("g1", e.projected_vertices(), e.budget());
  }
  const auto &xs = grid.xs;
  const auto &ys = grid.ys;
  const std::size_t nx = xs.size(), ny = ys.size();
  const auto col = owners(space.first(), xs);
  const auto row = owners(space.second(), ys);

  MonotoneDigraph g;
  g.reserve(nx * ny, 2 * nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      g.add_vertex({xs[i], ys[j]});
  auto id = [nx](std::size_t i, std::size_t j) {
    return static_cast<VertexId>(j * nx + i);
  };
  for (std::size_t j = 0; j < ny; ++j) {
    const std::size_t r = row[std::min(j, ny - 2)];
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t c = col[std::min(i, nx - 2)];
      if (i + 1 < nx) {
        const WeightedSegment s{{xs[i], ys[j]}, {xs[i + 1], ys[j]},
                                SegmentKind::AxisAligned, col[i], r};
        g.add_edge(id(i, j), id(i + 1, j), weighted_length(space, s), EdgeKind::Grid);
      }
      if (j + 1 < ny) {
        const WeightedSegment s{{xs[i], ys[j]}, {xs[i], ys[j + 1]},
                                SegmentKind::AxisAligned, c, row[j]};
        g.add_edge(id(i, j), id(i, j + 1), weighted_length(space, s), EdgeKind::Grid);
      }
    }
  }
  g.set_terminals(id(0, 0), id(nx - 1, ny - 1));
  return g;
}

MonotoneDigraph build_g1(const ParameterSpace &space, const GraphConfig &cfg) {
  cfg.validate();
  return build_g1(space, g1_mesh(space, cfg), cfg.max_vertices);
}

namespace {

// Index range [first, last] of lattice lines base + i * step, i in [0, k],
// that fall inside [lo, hi].
std::pair<long long, long long> index_range(double base, double step, long long k,
                                            double lo, double hi, double tol) {
  const long long first = std::max(0LL, static_cast<long long>(std::ceil((lo - tol - base) / step)));
  const long long last = std::min(k, static_cast<long long>(std::floor((hi + tol - base) / step)));
  return {first, last};
}

long long ball_divisions(double r, double m) {
  const double k = std::ceil(2.0 * r / m * (1.0 - 1e-12));
  if (!(k < 1e15))
    throw Error(ErrorCode::InvalidArgument, "grid ball mesh too fine");
  return std::max(1LL, static_cast<long long>(k));
}

} // namespace

std::vector<LatticeSegment> build_grid_ball(ParamPoint u, double r, double m,
                                            double width, double height) {
  if (!(r >= 0.0) || !(m > 0.0))
    throw Error(ErrorCode::InvalidArgument, "grid ball needs r >= 0 and m > 0");
  const double tol = 1e-12 * std::max({1.0, width, height});
  std::vector<LatticeSegment> out;
  if (r == 0.0)
    return out;
  const long long k = ball_divisions(r, m);
  const double step = 2.0 * r / static_cast<double>(k);
  const double xlo = std::max(0.0, u.x - r), xhi = std::min(width, u.x + r);
  const double ylo = std::max(0.0, u.y - r), yhi = std::min(height, u.y + r);
  if (xlo > xhi || ylo > yhi)
    return out;
  auto line = [&](double center, long long i) {
    return center + static_cast<double>(2 * i - k) / static_cast<double>(k) * r;
  };
  const auto [h0, h1] = index_range(u.y - r, step, k, 0.0, height, tol);
  for (long long j = h0; j <= h1; ++j)
    if (xhi > xlo)
      out.push_back({false, std::clamp(line(u.y, j), 0.0, height), xlo, xhi});
  const auto [v0, v1] = index_range(u.x - r, step, k, 0.0, width, tol);
  for (long long i = v0; i <= v1; ++i)
    if (yhi > ylo)
      out.push_back({true, std::clamp(line(u.x, i), 0.0, width), ylo, yhi});
  return out;
}

std::vector<LatticeSegment> build_grid_ball(const ParameterSpace &space,
                                            ParamPoint u,
                                            const GraphConfig &cfg) {
  const double w = weight(space, u);
  if (w < 1e-12)
    throw Error(ErrorCode::DegenerateBall, "grid ball at a zero of w");
  return build_grid_ball(u, cfg.c_radius * w, cfg.epsilon * w / cfg.c_mesh,
                         space.width(), space.height());
}

namespace {

struct Diagonal {
  ParamPoint a, b;
  const ParameterCell *cell;
};

struct Connector {
  ParamPoint a, b;
};

// Merges lattice segments on the same line into maximal intervals.
std::vector<LatticeSegment> merge_lines(std::vector<LatticeSegment> segs, double tol) {
  std::sort(segs.begin(), segs.end(), [](const LatticeSegment &p, const LatticeSegment &q) {
    return p.fixed != q.fixed ? p.fixed < q.fixed : p.lo < q.lo;
  });
  std::vector<LatticeSegment> out;
  std::size_t line_start = 0; // first entry of out on the current line
  for (const LatticeSegment &s : segs) {
    if (out.empty() || s.fixed - out[line_start].fixed > tol) {
      line_start = out.size();
      out.push_back(s);
      continue;
    }
    // same line; intervals arrive sorted by lo, so only the last can overlap
    LatticeSegment &prev = out.back();
    if (s.lo <= prev.hi + tol)
      prev.hi = std::max(prev.hi, s.hi);
    else
      out.push_back({s.vertical, out[line_start].fixed, s.lo, s.hi});
  }
  return out;
}

class Fenwick {
public:
  explicit Fenwick(std::size_t n) : t_(n + 1, 0) {}
  void add(std::size_t i, long long d) {
    for (++i; i < t_.size(); i += i & (~i + 1))
      t_[i] += d;
  }
  long long prefix(std::size_t n) const { // sum of [0, n)
    long long s = 0;
    for (; n > 0; n -= n & (~n + 1))
      s += t_[n];
    return s;
  }

private:
  std::vector<long long> t_;
};

// Sweep events over x: horizontal starts (0), vertical queries (1),
// horizontal ends (2).
struct Event {
  double x;
  int type;
  std::size_t idx;
  bool operator<(const Event &o) const {
    return x != o.x ? x < o.x : (type != o.type ? type < o.type : idx < o.idx);
  }
};

std::vector<Event> sweep_events(const std::vector<LatticeSegment> &hs,
                                const std::vector<LatticeSegment> &vs, double tol) {
  std::vector<Event> ev;
  ev.reserve(2 * hs.size() + vs.size());
  for (std::size_t k = 0; k < hs.size(); ++k) {
    ev.push_back({hs[k].lo - tol, 0, k});
    ev.push_back({hs[k].hi + tol, 2, k});
  }
  for (std::size_t k = 0; k < vs.size(); ++k)
    ev.push_back({vs[k].fixed, 1, k});
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::uint64_t count_crossings(const std::vector<LatticeSegment> &hs,
                              const std::vector<LatticeSegment> &vs, double tol) {
  // hs is sorted by its fixed coordinate after merge_lines
  std::vector<double> ys(hs.size());
  for (std::size_t k = 0; k < hs.size(); ++k)
    ys[k] = hs[k].fixed;
  Fenwick active(hs.size());
  std::uint64_t total = 0;
  for (const Event &e : sweep_events(hs, vs, tol)) {
    if (e.type == 0)
      active.add(e.idx, 1);
    else if (e.type == 2)
      active.add(e.idx, -1);
    else {
      const auto lo = std::lower_bound(ys.begin(), ys.end(), vs[e.idx].lo - tol) - ys.begin();
      const auto hi = std::upper_bound(ys.begin(), ys.end(), vs[e.idx].hi + tol) - ys.begin();
      total += static_cast<std::uint64_t>(active.prefix(hi) - active.prefix(lo));
    }
  }
  return total;
}

// Deduplicates vertices that agree to within `tol` in max norm. Buckets are
// chained through `next_` so the common one-vertex bucket costs no allocation.
class VertexRegistry {
public:
  VertexRegistry(MonotoneDigraph &g, double tol, std::size_t expected)
      : g_(g), tol_(tol), width_(64.0 * tol) {
    head_.reserve(expected);
    next_.reserve(expected);
  }

  VertexId get(ParamPoint p) {
    // buckets are much wider than tol, so a neighbour bucket only needs a
    // look when p sits near its border
    const double fx = p.x / width_, fy = p.y / width_;
    const long long kx = static_cast<long long>(std::floor(fx));
    const long long ky = static_cast<long long>(std::floor(fy));
    const double rx = fx - static_cast<double>(kx), ry = fy - static_cast<double>(ky);
    const double edge = 2.0 * tol_ / width_;
    const int x0 = rx < edge ? -1 : 0, x1 = rx > 1.0 - edge ? 1 : 0;
    const int y0 = ry < edge ? -1 : 0, y1 = ry > 1.0 - edge ? 1 : 0;
    for (long long dx = x0; dx <= x1; ++dx)
      for (long long dy = y0; dy <= y1; ++dy) {
        auto it = head_.find(pack(kx + dx, ky + dy));
        if (it == head_.end())
          continue;
        for (VertexId v = it->second; v != kNone; v = next_[v]) {
          const ParamPoint q = g_.point(v);
          if (std::abs(q.x - p.x) <= tol_ && std::abs(q.y - p.y) <= tol_)
            return v;
        }
      }
    const VertexId v = g_.add_vertex(p);
    auto [it, fresh] = head_.try_emplace(pack(kx, ky), v);
    next_.push_back(fresh ? kNone : it->second);
    it->second = v;
    return v;
  }

private:
  static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  static std::uint64_t pack(long long a, long long b) {
    return static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(b);
  }

  MonotoneDigraph &g_;
  double tol_;
  double width_;
  std::unordered_map<std::uint64_t, VertexId> head_;
  std::vector<VertexId> next_;
};

using Stops = std::vector<std::pair<double, VertexId>>;

// Intersection of segments p0p1 and q0q1 when they cross transversally.
std::optional<ParamPoint> cross_point(ParamPoint p0, ParamPoint p1, ParamPoint q0,
                                      ParamPoint q1, double tol) {
  const double rx = p1.x - p0.x, ry = p1.y - p0.y;
  const double sx = q1.x - q0.x, sy = q1.y - q0.y;
  const double den = rx * sy - ry * sx;
  const double scale = (std::abs(rx) + std::abs(ry)) * (std::abs(sx) + std::abs(sy));
  if (std::abs(den) <= 1e-14 * scale)
    return std::nullopt;
  const double qx = q0.x - p0.x, qy = q0.y - p0.y;
  const double t = (qx * sy - qy * sx) / den;
  const double u = (qx * ry - qy * rx) / den;
  const double lr = std::abs(rx) + std::abs(ry), ls = std::abs(sx) + std::abs(sy);
  if (t < -tol / lr || t > 1 + tol / lr || u < -tol / ls || u > 1 + tol / ls)
    return std::nullopt;
  return lerp(p0, p1, std::clamp(t, 0.0, 1.0));
}

bool on_segment(ParamPoint p, ParamPoint a, ParamPoint b, double tol) {
  if (p.x < std::min(a.x, b.x) - tol || p.x > std::max(a.x, b.x) + tol ||
      p.y < std::min(a.y, b.y) - tol || p.y > std::max(a.y, b.y) + tol)
    return false;
  const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  return std::abs(cross) <= tol * std::max(1.0, d1(a, b));
}

} // namespace

namespace {

struct G2Plan {
  std::vector<Diagonal> diags;
  std::vector<LatticeSegment> hs, vs;
  std::vector<Connector> conns;
  std::vector<ParamPoint> points; // terminals and degenerate balls
  std::uint64_t projected = 0;
};

G2Plan plan_g2(const ParameterSpace &space, const GraphConfig &cfg, std::uint64_t line_cap) {
  const double W = space.width(), H = space.height();
  const double tol = space.tolerance();

  // (1) monotone axes
  std::vector<Diagonal> diags;
  std::vector<ParamPoint> points{space.source(), space.sink()};
  for (const ParameterCell &cell : space.cells()) {
    if (cell.degeneracy == Degeneracy::Antiparallel)
      continue;
    const FreeSpaceAxes axes = free_space_axes(cell);
    if (!axes.ell)
      continue;
    if (d1(axes.ell->a, axes.ell->b) <= tol)
      points.push_back(axes.ell->a);
    else
      diags.push_back({axes.ell->a, axes.ell->b, &cell});
  }

  // (2) grid balls at the edge minimizers
  std::vector<LatticeSegment> hs, vs;
  double ball_lines = 0;
  for (const ParameterEdge &edge : space.edges()) {
    const EdgeMinimum em = edge_min(space, edge);
    if (em.weight < 1e-12) {
      points.push_back(em.point); // degenerate ball: just the point
      continue;
    }
    const double r = cfg.c_radius * em.weight;
    const double m = cfg.epsilon * em.weight / cfg.c_mesh;
    // the in-P lines of one ball all cross each other
    const double nx = std::min(2.0 * r, W) / m + 2.0;
    const double ny = std::min(2.0 * r, H) / m + 2.0;
    ball_lines += nx + ny;
    if (nx * ny > static_cast<double>(line_cap) || ball_lines > static_cast<double>(line_cap))
      throw BudgetExceeded("g2", static_cast<std::uint64_t>(std::min(nx * ny, 1.8e19)), line_cap);
    for (const LatticeSegment &s : build_grid_ball(em.point, r, m, W, H))
      (s.vertical ? vs : hs).push_back(s);
  }
  hs = merge_lines(std::move(hs), tol);
  vs = merge_lines(std::move(vs), tol);

  // (3) terminal connectors
  std::vector<Connector> conns;
  const ParameterCell &first = space.cell(0, 0);
  if (first.degeneracy != Degeneracy::Antiparallel) {
    const FreeSpaceAxes axes = free_space_axes(first);
    if (axes.ell && d1(axes.ell->a, space.source()) > tol)
      conns.push_back({space.source(), axes.ell->a});
  }
  const ParameterCell &last = space.cell(space.cols() - 1, space.rows() - 1);
  if (last.degeneracy != Degeneracy::Antiparallel) {
    const FreeSpaceAxes axes = free_space_axes(last);
    if (axes.ell && d1(axes.ell->b, space.sink()) > tol)
      conns.push_back({axes.ell->b, space.sink()});
  }

  const std::uint64_t crossings = count_crossings(hs, vs, tol);
  const std::uint64_t projected = crossings + 2 * (hs.size() + vs.size() + diags.size() + conns.size()) +
                                  points.size();
  return {std::move(diags), std::move(hs), std::move(vs), std::move(conns), std::move(points), projected};
}


} // namespace

MonotoneDigraph build_g2(const ParameterSpace &space, const GraphConfig &cfg) {
  cfg.validate();
  const double tol = space.tolerance();
  const std::uint64_t budget = cfg.max_vertices;
  G2Plan plan = plan_g2(space, cfg, budget);
  if (plan.projected > budget)
    throw BudgetExceeded("g2", plan.projected, budget);
  const std::uint64_t projected = plan.projected;
  auto &diags = plan.diags;
  auto &hs = plan.hs;
  auto &vs = plan.vs;
  auto &conns = plan.conns;
  auto &points = plan.points;

  MonotoneDigraph g;
  g.reserve(projected, 2 * projected);
  VertexRegistry reg(g, tol, projected);
  const VertexId s_id = reg.get(space.source());
  const VertexId t_id = reg.get(space.sink());

  std::vector<Stops> h_stops(hs.size()), v_stops(vs.size()), d_stops(diags.size()),
      c_stops(conns.size());
  for (std::size_t k = 0; k < hs.size(); ++k) {
    h_stops[k].push_back({hs[k].lo, reg.get({hs[k].lo, hs[k].fixed})});
    h_stops[k].push_back({hs[k].hi, reg.get({hs[k].hi, hs[k].fixed})});
  }
  for (std::size_t k = 0; k < vs.size(); ++k) {
    v_stops[k].push_back({vs[k].lo, reg.get({vs[k].fixed, vs[k].lo})});
    v_stops[k].push_back({vs[k].hi, reg.get({vs[k].fixed, vs[k].hi})});
  }
  for (std::size_t k = 0; k < diags.size(); ++k) {
    d_stops[k].push_back({diags[k].a.x, reg.get(diags[k].a)});
    d_stops[k].push_back({diags[k].b.x, reg.get(diags[k].b)});
  }
  for (std::size_t k = 0; k < conns.size(); ++k) {
    c_stops[k].push_back({0.0, reg.get(conns[k].a)});
    c_stops[k].push_back({d1(conns[k].a, conns[k].b), reg.get(conns[k].b)});
  }

  // horizontal x vertical
  {
    std::set<std::pair<double, std::size_t>> active;
    for (const Event &e : sweep_events(hs, vs, tol)) {
      if (e.type == 0) {
        active.insert({hs[e.idx].fixed, e.idx});
      } else if (e.type == 2) {
        active.erase({hs[e.idx].fixed, e.idx});
      } else {
        const LatticeSegment &v = vs[e.idx];
        for (auto it = active.lower_bound({v.lo - tol, 0});
             it != active.end() && it->first <= v.hi + tol; ++it) {
          const VertexId id = reg.get({v.fixed, it->first});
          h_stops[it->second].push_back({v.fixed, id});
          v_stops[e.idx].push_back({it->first, id});
        }
      }
    }
  }

  // axes x lattice lines; hs and vs are sorted by their fixed coordinate
  auto by_fixed = [](const LatticeSegment &s, double value) { return s.fixed < value; };
  for (std::size_t k = 0; k < diags.size(); ++k) {
    const Diagonal &d = diags[k];
    const double slope_inv = (d.b.x - d.a.x) / (d.b.y - d.a.y);
    for (auto it = std::lower_bound(hs.begin(), hs.end(), d.a.y - tol, by_fixed);
         it != hs.end() && it->fixed <= d.b.y + tol; ++it) {
      const double x = std::clamp(d.a.x + (it->fixed - d.a.y) * slope_inv, d.a.x, d.b.x);
      if (x < it->lo - tol || x > it->hi + tol)
        continue;
      const VertexId id = reg.get({x, it->fixed});
      h_stops[static_cast<std::size_t>(it - hs.begin())].push_back({x, id});
      d_stops[k].push_back({x, id});
    }
    for (auto it = std::lower_bound(vs.begin(), vs.end(), d.a.x - tol, by_fixed);
         it != vs.end() && it->fixed <= d.b.x + tol; ++it) {
      const double x = std::clamp(it->fixed, d.a.x, d.b.x);
      const double y = std::clamp(d.a.y + (x - d.a.x) / slope_inv, d.a.y, d.b.y);
      if (y < it->lo - tol || y > it->hi + tol)
        continue;
      const VertexId id = reg.get({it->fixed, y});
      v_stops[static_cast<std::size_t>(it - vs.begin())].push_back({y, id});
      d_stops[k].push_back({x, id});
    }
  }

  // connectors x everything
  for (std::size_t k = 0; k < conns.size(); ++k) {
    const Connector &c = conns[k];
    auto add = [&](ParamPoint p, Stops &other, double key) {
      const VertexId id = reg.get(p);
      other.push_back({key, id});
      c_stops[k].push_back({d1(c.a, p), id});
    };
    for (std::size_t h = 0; h < hs.size(); ++h)
      if (auto p = cross_point(c.a, c.b, {hs[h].lo, hs[h].fixed}, {hs[h].hi, hs[h].fixed}, tol))
        add(*p, h_stops[h], p->x);
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (auto p = cross_point(c.a, c.b, {vs[v].fixed, vs[v].lo}, {vs[v].fixed, vs[v].hi}, tol))
        add(*p, v_stops[v], p->y);
    for (std::size_t d = 0; d < diags.size(); ++d)
      if (auto p = cross_point(c.a, c.b, diags[d].a, diags[d].b, tol))
        add(*p, d_stops[d], p->x);
    for (std::size_t o = k + 1; o < conns.size(); ++o)
      if (auto p = cross_point(c.a, c.b, conns[o].a, conns[o].b, tol))
        add(*p, c_stops[o], d1(conns[o].a, *p));
  }

  // isolated points (terminals, degenerate balls) split what they lie on
  for (const ParamPoint &p : points) {
    const VertexId id = reg.get(p);
    for (std::size_t h = 0; h < hs.size(); ++h)
      if (on_segment(p, {hs[h].lo, hs[h].fixed}, {hs[h].hi, hs[h].fixed}, tol))
        h_stops[h].push_back({p.x, id});
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (on_segment(p, {vs[v].fixed, vs[v].lo}, {vs[v].fixed, vs[v].hi}, tol))
        v_stops[v].push_back({p.y, id});
    for (std::size_t d = 0; d < diags.size(); ++d)
      if (on_segment(p, diags[d].a, diags[d].b, tol))
        d_stops[d].push_back({p.x, id});
    for (std::size_t c = 0; c < conns.size(); ++c)
      if (on_segment(p, conns[c].a, conns[c].b, tol))
        c_stops[c].push_back({d1(conns[c].a, p), id});
  }

  if (g.vertex_count() > budget)
    throw BudgetExceeded("g2", g.vertex_count(), budget);

  const double edge_tol = 4.0 * tol;
  auto chain = [&](Stops &stops, EdgeKind kind, auto &&weigh) {
    std::sort(stops.begin(), stops.end());
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
      const VertexId a = stops[k].second, b = stops[k + 1].second;
      if (a == b)
        continue;
      g.add_edge(a, b, weigh(g.point(a), g.point(b)), kind, edge_tol);
    }
  };
  auto general = [&](ParamPoint a, ParamPoint b) { return weighted_length(space, a, b); };
  for (Stops &s : h_stops)
    chain(s, EdgeKind::Lattice, general);
  for (Stops &s : v_stops)
    chain(s, EdgeKind::Lattice, general);
  for (std::size_t k = 0; k < diags.size(); ++k) {
    const ParameterCell &cell = *diags[k].cell;
    const SegmentKind kind =
        cell.degeneracy == Degeneracy::None ? SegmentKind::OnAxis : SegmentKind::General;
    chain(d_stops[k], EdgeKind::Axis, [&](ParamPoint a, ParamPoint b) {
      return weighted_length(space, WeightedSegment{a, b, kind, cell.col, cell.row});
    });
  }
  for (Stops &s : c_stops)
    chain(s, EdgeKind::Connector, general);

  g.set_terminals(s_id, t_id);
  return g;
}

std::uint64_t g2_projected_vertices(const ParameterSpace &space, const GraphConfig &cfg,
                                    std::uint64_t line_cap) {
  cfg.validate();
  return plan_g2(space, cfg, line_cap).projected;
}

FrechetResult approximate_integral_frechet(const ParameterSpace &space,
                                           const GraphConfig &cfg) {
  cfg.validate();
  FrechetResult res;
  double best = std::numeric_limits<double>::infinity();
  std::vector<ParamPoint> best_path;

  auto run = [&](const char *name, Mode mode, auto &&build) {
    GraphStats st;
    st.graph = name;
    try {
      const MonotoneDigraph g = build();
      st.built = true;
      st.vertices = g.vertex_count();
      st.edges = g.edge_count();
      const PathResult pr = dijkstra(g, g.source(), g.sink());
      st.distance = pr.distance;
      if (!pr.reachable())
        st.note = "source and sink are disconnected";
      else if (pr.distance < best) {
        best = pr.distance;
        best_path = pr.points;
        res.winning_mode = mode;
      }
    } catch (const BudgetExceeded &e) {
      st.projected_vertices = e.projected_vertices();
      st.distance = std::numeric_limits<double>::infinity();
      st.note = e.what();
    }
    res.graphs.push_back(std::move(st));
  };

  if (cfg.mode == Mode::Oracle) {
    GraphStats st;
    st.graph = "oracle";
    try {
      const ParameterGrid grid = snapped_grid(space, g1_mesh(space, cfg), cfg.max_vertices);
      OracleResult r = dense_grid_oracle(space, grid, true, true);
      st.built = true;
      st.vertices = grid.vertex_count();
      st.edges = 3 * grid.vertex_count();
      st.distance = r.value;
      best = r.value;
      best_path = std::move(r.path);
      res.winning_mode = Mode::Oracle;
    } catch (const BudgetExceeded &e) {
      throw BudgetExceeded("oracle", e.projected_vertices(), e.budget());
    }
    res.graphs.push_back(std::move(st));
  } else {
    if (cfg.mode == Mode::G1 || cfg.mode == Mode::Both) {
      // G1 is a right/up grid, i.e. a DAG in row-major order; dynamic
      // programming over it gives the same distance as Dijkstra on the
      // materialized graph without storing millions of edges
      GraphStats st;
      st.graph = "g1";
      try {
        ParameterGrid grid;
        try {
          grid = snapped_grid(space, g1_mesh(space, cfg), cfg.max_vertices);
        } catch (const BudgetExceeded &e) {
          throw BudgetExceeded("g1", e.projected_vertices(), e.budget());
        }
        OracleResult r = dense_grid_oracle(space, grid, false, true);
        st.built = true;
        st.vertices = grid.vertex_count();
        st.edges = 2 * grid.vertex_count() - grid.xs.size() - grid.ys.size();
        st.distance = r.value;
        if (r.value < best) {
          best = r.value;
          best_path = std::move(r.path);
          res.winning_mode = Mode::G1;
        }
      } catch (const BudgetExceeded &e) {
        st.projected_vertices = e.projected_vertices();
        st.distance = std::numeric_limits<double>::infinity();
        st.note = e.what();
      }
      res.graphs.push_back(std::move(st));
    }
    if (cfg.mode == Mode::G2 || cfg.mode == Mode::Both)
      run("g2", Mode::G2, [&] { return build_g2(space, cfg); });
  }

  if (!std::isfinite(best)) {
    const bool any_built = std::any_of(res.graphs.begin(), res.graphs.end(),
                                       [](const GraphStats &s) { return s.built; });
    if (!any_built) {
      std::string msg = "no graph fits the vertex budget:";
      for (const GraphStats &s : res.graphs)
        msg += " " + s.graph + " needs " + std::to_string(s.projected_vertices);
      throw Error(ErrorCode::NoFeasibleGraph, msg);
    }
    throw Error(ErrorCode::Disconnected, "no s-t path in any built graph");
  }
  res.value = best;
  res.average = best / (space.width() + space.height());
  res.path = simplify_polyline(best_path, 0.0);
  return res;
}

} // namespace ifd
