#include "doctest.h"

#include "ifd/cell_paths.hpp"
#include "ifd/errors.hpp"
#include "ifd/integrals.hpp"
#include "ifd/shortest_path.hpp"
#include "support.hpp"

#include <random>

using namespace ifd;
using test::arsinh_antiderivative;
using test::space_of;

namespace {

bool monotone(const std::vector<ParamPoint> &pts) {
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!leq_xy(pts[i - 1], pts[i], 1e-12))
      return false;
  return true;
}

double polyline_cost(const ParameterSpace &s, const std::vector<ParamPoint> &pts) {
  double sum = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    sum += weighted_length(s, pts[i - 1], pts[i]);
  return sum;
}

// Best composition of two in-cell staircase paths over sampled crossings of
// the shared edge. Every candidate is a real path, so this is an upper bound.
double two_cell_oracle(const ParameterSpace &s, const ParameterCell &from,
                       const ParameterCell &to, ParamPoint o, ParamPoint p, int k,
                       int samples) {
  const bool vertical = to.col == from.col + 1;
  const double lo = vertical ? std::max(from.y0, o.y) : std::max(from.x0, o.x);
  const double hi = vertical ? std::min(from.y1, p.y) : std::min(from.x1, p.x);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    const double t = lo + (hi - lo) * i / samples;
    const ParamPoint z = vertical ? ParamPoint{from.x1, t} : ParamPoint{t, from.y1};
    best = std::min(best, staircase_cell_oracle(s, from, o, z, k).value +
                              staircase_cell_oracle(s, to, z, p, k).value);
  }
  return best;
}

} // namespace

TEST_CASE("cell_shortest_path: parallel cell examples") {
  const auto s = test::parallel_unit();
  const ParameterCell &c = s.cell(0, 0);

  const CellPath diag = cell_shortest_path(s, c, {0, 0}, {1, 1});
  CHECK(diag.branch == CellPathBranch::ThroughAxis);
  REQUIRE(diag.vertices.size() == 2);
  CHECK(diag.weighted_length == doctest::Approx(2.0).epsilon(1e-14));

  const CellPath up = cell_shortest_path(s, c, {0, 0.5}, {1, 1});
  REQUIRE(up.vertices.size() == 3);
  CHECK(up.vertices[1].x == doctest::Approx(0.5));
  CHECK(up.vertices[1].y == doctest::Approx(0.5));
  const double want_up = arsinh_antiderivative(0.5) + 1.0;
  CHECK(up.weighted_length == doctest::Approx(1.520114).epsilon(1e-6));
  CHECK(std::abs(up.weighted_length - want_up) < 1e-12);
  CHECK(std::abs(up.weighted_length - polyline_cost(s, up.vertices)) < 1e-12);
  CHECK(std::abs(quadrature_weighted_length(s, {0, 0.5}, {0.5, 0.5}) + 1.0 - want_up) < 1e-10);

  const CellPath corner = cell_shortest_path(s, c, {0, 0.6}, {0.3, 1});
  CHECK(corner.branch == CellPathBranch::AroundCorner);
  REQUIRE(corner.vertices.size() == 3);
  CHECK(corner.vertices[1] == ParamPoint{0.3, 0.6});
  const double horizontal = arsinh_antiderivative(0.6) - arsinh_antiderivative(0.3);
  const double vertical = arsinh_antiderivative(0.7) - arsinh_antiderivative(0.3);
  CHECK(horizontal == doctest::Approx(0.329828).epsilon(1e-6));
  CHECK(vertical == doctest::Approx(0.449122).epsilon(1e-6));
  CHECK(corner.weighted_length == doctest::Approx(0.778950).epsilon(1e-6));
  CHECK(std::abs(corner.weighted_length - (horizontal + vertical)) < 1e-12);
  CHECK(std::abs(quadrature_weighted_length(s, {0, 0.6}, {0.3, 0.6}) - horizontal) < 1e-10);
  CHECK(std::abs(quadrature_weighted_length(s, {0.3, 0.6}, {0.3, 1}) - vertical) < 1e-10);
}

TEST_CASE("cell_shortest_path: errors and degenerate input") {
  const auto s = test::perpendicular_unit();
  const ParameterCell &c = s.cell(0, 0);
  const CellPath same = cell_shortest_path(s, c, {0.3, 0.3}, {0.3, 0.3});
  CHECK(same.weighted_length == 0.0);
  CHECK_THROWS_AS(cell_shortest_path(s, c, {0.5, 0.5}, {0.2, 0.9}), Error);
  CHECK_THROWS_AS(cell_shortest_path(s, c, {0.5, 0.5}, {1.5, 0.9}), Error);

  const auto a = test::antiparallel_unit();
  CHECK_THROWS_AS(cell_shortest_path(a, a.cell(0, 0), {0, 0}, {1, 1}), Error);
  const CellPath fb = cell_path_or_fallback(a, a.cell(0, 0), {0, 0}, {1, 1});
  CHECK(fb.branch == CellPathBranch::DegenerateFallback);
  CHECK(monotone(fb.vertices));
  CHECK(std::abs(fb.weighted_length - polyline_cost(a, fb.vertices)) < 1e-9);
}

TEST_CASE("cell_shortest_path: shape invariants") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = test::random_space(rng, 1, 1);
    const ParameterCell &c = s.cell(0, 0);
    if (c.degeneracy == Degeneracy::Antiparallel)
      continue;
    ParamPoint a = test::random_point(rng, c), b = test::random_point(rng, c);
    if (a.x > b.x)
      std::swap(a.x, b.x);
    if (a.y > b.y)
      std::swap(a.y, b.y);
    const CellPath p = cell_shortest_path(s, c, a, b);
    REQUIRE(!p.vertices.empty());
    CHECK(p.vertices.size() <= 4);
    CHECK(p.vertices.front() == a);
    CHECK(p.vertices.back() == b);
    CHECK(monotone(p.vertices));
    CHECK(std::abs(p.weighted_length - polyline_cost(s, p.vertices)) <= 1e-10 * (1 + p.weighted_length));
  }
}

TEST_CASE("property: cell_shortest_path beats the staircase oracle") {
  std::mt19937_64 rng(32);
  int n = 0;
  while (n < 100) {
    const auto s = test::random_space(rng, 1, 1);
    const ParameterCell &c = s.cell(0, 0);
    if (c.degeneracy != Degeneracy::None)
      continue;
    ParamPoint a = test::random_point(rng, c), b = test::random_point(rng, c);
    if (a.x > b.x)
      std::swap(a.x, b.x);
    if (a.y > b.y)
      std::swap(a.y, b.y);
    ++n;
    const double exact = cell_shortest_path(s, c, a, b).weighted_length;
    double prev = std::numeric_limits<double>::infinity();
    for (int k : {16, 32, 64, 128}) {
      const double o = staircase_cell_oracle(s, c, a, b, k).value;
      CHECK(exact <= o + 1e-10 * (1 + o));
      CHECK(o <= prev + 1e-12 * (1 + o));
      prev = o;
    }
  }
}

TEST_CASE("staircase oracle examples") {
  const auto s = test::parallel_unit();
  const ParameterCell &c = s.cell(0, 0);
  for (int k : {2, 7, 32})
    CHECK(staircase_cell_oracle(s, c, {0, 0}, {1, 1}, k).value == doctest::Approx(2.0).epsilon(1e-14));
  const double v = staircase_cell_oracle(s, c, {0, 0.5}, {1, 1}, 128).value;
  CHECK(v >= 1.520114 - 1e-6);
  CHECK(v <= 1.54);
  CHECK(staircase_cell_oracle(s, c, {0.2, 0.4}, {0.2, 0.4}, 16).value == 0.0);
}

TEST_CASE("two_cell_path: axes meeting on the shared edge") {
  // two parallel cells stacked, both axes on y = x
  const auto s = space_of({{0, 0}, {2, 0}}, {{0, 1}, {1, 1}, {2, 1}});
  const ParameterCell &lower = s.cell(0, 0), &upper = s.cell(0, 1);
  const CellPath p = two_cell_path(s, lower, upper, {0.5, 0.5}, {1.5, 1.5});
  // c_o = c_p = (1, 1): the middle piece collapses
  REQUIRE(p.vertices.size() == 3);
  CHECK(p.vertices[1].x == doctest::Approx(1.0));
  CHECK(p.vertices[1].y == doctest::Approx(1.0));
  CHECK(p.weighted_length == doctest::Approx(2.0).epsilon(1e-12));
  const double oracle = two_cell_oracle(s, lower, upper, {0.5, 0.5}, {1.5, 1.5}, 128, 64);
  CHECK(p.weighted_length <= oracle + 1e-12);

  CHECK_THROWS_AS(two_cell_path(s, upper, lower, {1.5, 1.5}, {0.5, 0.5}), Error);
  CHECK_THROWS_AS(two_cell_path(s, lower, upper, {0.5, 0.6}, {1.5, 1.5}), Error);
}

TEST_CASE("two_cell_path: distinct axis ends on the edge give four vertices") {
  // lower row parallel (axis y = x ends at (1, 1)); upper row perpendicular
  // with axis y = x - 1, which enters the row at (2, 1)
  const auto s = space_of({{0, 0}, {4, 0}}, {{0, 1}, {1, 1}, {1, 2}});
  const ParameterCell &lower = s.cell(0, 0), &upper = s.cell(0, 1);
  const FreeSpaceAxes lo = free_space_axes(lower), up = free_space_axes(upper);
  REQUIRE(lo.ell);
  REQUIRE(up.ell);
  const ParamPoint o = lerp(lo.ell->a, lo.ell->b, 0.5), p = lerp(up.ell->a, up.ell->b, 0.5);
  const CellPath path = two_cell_path(s, lower, upper, o, p);
  REQUIRE(path.vertices.size() == 4);
  CHECK(path.vertices[1] == lo.ell->b);
  CHECK(path.vertices[2] == up.ell->a);
  CHECK(path.weighted_length <= two_cell_oracle(s, lower, upper, o, p, 64, 64) + 1e-12);
}

TEST_CASE("property: two_cell_path on random adjacent cells") {
  std::mt19937_64 rng(33);
  int n = 0;
  for (int trial = 0; trial < 2000 && n < 40; ++trial) {
    const auto s = space_of(test::random_polyline(rng, 2), test::random_polyline(rng, 2));
    const bool right = trial % 2 == 0;
    const ParameterCell &from = s.cell(0, 0);
    const ParameterCell &to = right ? s.cell(1, 0) : s.cell(0, 1);
    if (from.degeneracy != Degeneracy::None || to.degeneracy != Degeneracy::None)
      continue;
    const FreeSpaceAxes ao = free_space_axes(from), ap = free_space_axes(to);
    if (!ao.ell || !ap.ell)
      continue;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const ParamPoint o = lerp(ao.ell->a, ao.ell->b, u(rng));
    const ParamPoint p = lerp(ap.ell->a, ap.ell->b, u(rng));
    const double lo = right ? std::max(from.y0, o.y) : std::max(from.x0, o.x);
    const double hi = right ? std::min(from.y1, p.y) : std::min(from.x1, p.x);
    if (!leq_xy(o, p) || hi - lo < 1e-3)
      continue;
    ++n;
    const CellPath path = two_cell_path(s, from, to, o, p);
    CHECK(monotone(path.vertices));
    CHECK(path.vertices.front() == o);
    CHECK(path.vertices.back() == p);
    const double oracle = two_cell_oracle(s, from, to, o, p, 32, 32);
    // the sampled crossing and lattice both cost at most a Lipschitz step
    const double gap = 2.0 * ((p.x - o.x) + (p.y - o.y)) * (hi - lo) / 32.0;
    CHECK(path.weighted_length <= oracle + 1e-9);
    CHECK(path.weighted_length >= oracle - gap);
  }
  CHECK(n >= 20);
}

TEST_CASE("partial similarity profile examples") {
  const auto par = test::parallel_unit();
  const std::vector<ParamPoint> diag{{0, 0}, {1, 1}};
  const SimilarityProfile p = partial_similarity_profile(par, par.cell(0, 0), diag);
  CHECK(p(0.0) == 0.0);
  CHECK(p(0.999) == 0.0);
  CHECK(p(1.0) == doctest::Approx(2.0));
  CHECK(p(5.0) == doctest::Approx(2.0));
  CHECK(p.total_length() == doctest::Approx(2.0));

  const auto perp = test::perpendicular_unit();
  const SimilarityProfile q = partial_similarity_profile(perp, perp.cell(0, 0), diag);
  for (double d : {0.0, 0.1, 0.5, 1.0, 1.3, std::sqrt(2.0), 2.0})
    CHECK(q(d) == doctest::Approx(2.0 * std::min(1.0, d / std::sqrt(2.0))));

  // w > 0 everywhere on this path
  const std::vector<ParamPoint> off{{0.2, 0.0}, {1.0, 0.5}};
  CHECK(partial_similarity_profile(perp, perp.cell(0, 0), off)(0.0) == 0.0);
}

TEST_CASE("property: profiles are non-decreasing and reach the L1 length") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = test::random_space(rng, 1, 1);
    const ParameterCell &c = s.cell(0, 0);
    std::vector<ParamPoint> pts{test::random_point(rng, c)};
    for (int i = 0; i < 3; ++i) {
      ParamPoint q = test::random_point(rng, c);
      q.x = std::max(q.x, pts.back().x);
      q.y = std::max(q.y, pts.back().y);
      pts.push_back(q);
    }
    const SimilarityProfile prof = partial_similarity_profile(s, c, pts);
    double l1 = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
      l1 += d1(pts[i - 1], pts[i]);
    CHECK(prof.total_length() == doctest::Approx(l1));
    CHECK(prof(1e9) == doctest::Approx(l1));
    double prev = 0;
    for (int k = 0; k <= 64; ++k) {
      const double v = prof(2.0 * k / 64);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
    // direct count on a fine sample of the path
    for (double delta : prof.breakpoints()) {
      const double d = delta + 1e-7;
      double measured = 0;
      for (std::size_t i = 1; i < pts.size(); ++i) {
        const int m = 2000;
        for (int j = 0; j < m; ++j) {
          const ParamPoint mid = lerp(pts[i - 1], pts[i], (j + 0.5) / m);
          if (c.weight(mid) <= d)
            measured += d1(pts[i - 1], pts[i]) / m;
        }
      }
      CHECK(std::abs(prof(d) - measured) <= 2e-3 * (1 + l1));
    }
  }
}
