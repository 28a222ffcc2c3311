#include "doctest.h"

#include "ifd/errors.hpp"
#include "ifd/integrals.hpp"
#include "ifd/shortest_path.hpp"
#include "support.hpp"

#include <random>

using namespace ifd;
using test::space_of;

namespace {

// Random DAG on points sorted by x + y, edges only between dominated pairs.
MonotoneDigraph random_dag(std::mt19937_64 &rng, int n, double edge_prob) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ParamPoint> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back({u(rng), u(rng)});
  pts.push_back({0, 0});
  pts.push_back({1, 1});
  std::sort(pts.begin(), pts.end(),
            [](ParamPoint a, ParamPoint b) { return a.x + a.y < b.x + b.y; });
  MonotoneDigraph g;
  for (const ParamPoint &p : pts)
    g.add_vertex(p);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (i != j && leq_xy(pts[i], pts[j]) && u(rng) < edge_prob)
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j), 3.0 * u(rng),
                   EdgeKind::Grid);
  g.set_terminals(0, static_cast<VertexId>(pts.size() - 1));
  return g;
}

} // namespace

TEST_CASE("dijkstra examples") {
  MonotoneDigraph g;
  const VertexId a = g.add_vertex({0, 0}), b = g.add_vertex({1, 0});
  g.add_edge(a, b, 3.5, EdgeKind::Grid);
  const PathResult r = dijkstra(g, a, b);
  CHECK(r.distance == 3.5);
  CHECK(r.vertices == std::vector<VertexId>{a, b});

  const PathResult self = dijkstra(g, a, a);
  CHECK(self.distance == 0.0);
  CHECK(self.vertices == std::vector<VertexId>{a});

  const PathResult none = dijkstra(g, b, a);
  CHECK_FALSE(none.reachable());
  CHECK(none.vertices.empty());

  MonotoneDigraph d;
  const VertexId s = d.add_vertex({0, 0}), top = d.add_vertex({0, 1}), right = d.add_vertex({1, 0}),
                 t = d.add_vertex({1, 1});
  d.add_edge(s, top, 1.0, EdgeKind::Grid);
  d.add_edge(top, t, 1.0, EdgeKind::Grid);
  d.add_edge(s, right, 0.5, EdgeKind::Grid);
  d.add_edge(right, t, 0.4, EdgeKind::Grid);
  const PathResult dia = dijkstra(d, s, t);
  CHECK(dia.distance == doctest::Approx(0.9));
  CHECK(dia.vertices == std::vector<VertexId>{s, right, t});
  CHECK(dia.points.size() == 3);
}

TEST_CASE("add_edge rejects bad edges") {
  MonotoneDigraph g;
  const VertexId a = g.add_vertex({0, 0}), b = g.add_vertex({1, 0});
  CHECK_THROWS_AS(g.add_edge(b, a, 1.0, EdgeKind::Grid), Error);
  CHECK_THROWS_AS(g.add_edge(a, b, -1.0, EdgeKind::Grid), Error);
  CHECK_THROWS_AS(g.add_edge(a, b, std::nan(""), EdgeKind::Grid), Error);
}

TEST_CASE("property: dijkstra agrees with Bellman-Ford") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const MonotoneDigraph g = random_dag(rng, 60, 0.15);
    REQUIRE(g.edge_count() <= 10000);
    const PathResult r = dijkstra(g, g.source(), g.sink());
    const double bf = bellman_ford(g, g.source(), g.sink());
    if (!r.reachable()) {
      CHECK(std::isinf(bf));
      continue;
    }
    CHECK(std::abs(r.distance - bf) <= 1e-12 * (1 + bf));
    CHECK(std::abs(path_weight(g, r.vertices) - r.distance) <= 1e-9 * (1 + r.distance));
    for (std::size_t i = 1; i < r.points.size(); ++i)
      CHECK(leq_xy(r.points[i - 1], r.points[i]));
  }
}

TEST_CASE("snapped_grid") {
  const auto s = space_of({{0, 0}, {1, 0}, {1, 0.5}}, {{0, 0}, {0, 1}});
  const ParameterGrid g = snapped_grid(s, 0.25, 1000);
  CHECK(g.xs.size() == 7); // 4 + 2 parts
  CHECK(g.ys.size() == 5);
  CHECK(std::find(g.xs.begin(), g.xs.end(), 1.0) != g.xs.end());
  CHECK_THROWS_AS(snapped_grid(s, 0.25, 10), BudgetExceeded);
  try {
    (void)snapped_grid(s, 0.25, 10);
  } catch (const BudgetExceeded &e) {
    CHECK(e.projected_vertices() == 35);
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  const ParameterGrid r = refine(g, 3);
  CHECK(r.xs.size() == 19);
  CHECK(r.ys.size() == 13);
}

TEST_CASE("dense_grid_oracle examples") {
  const auto par = test::parallel_unit();
  for (double h : {1.0, 0.5, 0.25, 0.1})
    CHECK(dense_grid_oracle(par, h) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(dense_grid_oracle(test::perpendicular_unit(), 0.125) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  const auto same = space_of({{0, 0}, {1, 0}, {1, 2}}, {{0, 0}, {1, 0}, {1, 2}});
  CHECK(std::abs(dense_grid_oracle(same, 0.5)) <= 1e-12);
}

TEST_CASE("property: oracle refinement and diagonal moves never hurt") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = test::random_space(rng, 1, 4);
    const ParameterGrid g = snapped_grid(s, 0.1, 1'000'000);
    const OracleResult with = dense_grid_oracle(s, g, true, true);
    const OracleResult without = dense_grid_oracle(s, g, false, false);
    CHECK(with.value <= without.value + 1e-12);
    const double finer = dense_grid_oracle(s, refine(g, 2), true, false).value;
    CHECK(finer <= with.value + 1e-12);
    // the returned path is a real matching of that cost
    REQUIRE(with.path.size() >= 2);
    CHECK(with.path.front() == s.source());
    CHECK(with.path.back() == s.sink());
    double cost = 0;
    for (std::size_t i = 1; i < with.path.size(); ++i) {
      CHECK(leq_xy(with.path[i - 1], with.path[i]));
      cost += weighted_length(s, with.path[i - 1], with.path[i]);
    }
    CHECK(std::abs(cost - with.value) <= 1e-9 * (1 + cost));
  }
}

TEST_CASE("property: staircase oracle refinement is monotone") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = test::random_space(rng, 1, 1);
    const ParameterCell &c = s.cell(0, 0);
    ParamPoint a = test::random_point(rng, c), b = test::random_point(rng, c);
    if (a.x > b.x)
      std::swap(a.x, b.x);
    if (a.y > b.y)
      std::swap(a.y, b.y);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 4; k <= 128; k *= 2) {
      const double v = staircase_cell_oracle(s, c, a, b, k).value;
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}
