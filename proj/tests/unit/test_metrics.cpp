#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hyperlay/metrics.hpp"
#include "oracles.hpp"

using namespace hyperlay;

namespace {

Layout hyper(std::vector<LobachevskyPoint> pts, double alpha = 1.0) {
  Layout l;
  l.coords = std::move(pts);
  l.alpha = alpha;
  return l;
}

Layout random_layout(Geometry g, std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2, 2);
  Layout l;
  switch (g) {
    case Geometry::euclidean: {
      std::vector<EuclideanPoint> p(n);
      for (auto& x : p) x = {u(rng), u(rng)};
      l.coords = p;
      break;
    }
    case Geometry::hyperbolic: {
      std::vector<LobachevskyPoint> p(n);
      for (auto& x : p) x = {u(rng), u(rng)};
      l.coords = p;
      break;
    }
    case Geometry::spherical: {
      std::vector<SpherePoint> p;
      for (std::size_t i = 0; i < n; ++i) p.emplace_back(u(rng), u(rng), u(rng) + 0.01);
      l.coords = p;
      break;
    }
  }
  return l;
}

}  // namespace

TEST_CASE("examples") {
  const DistanceMatrix d2 = apsp(path_graph(2));
  CHECK(stress(hyper({{0, 0}, {2, 0}}), d2, WeightRule::unit, 1.0) == doctest::Approx(1.0));
  CHECK(distortion(hyper({{0, 0}, {2, 0}}), d2) == doctest::Approx(1.0));
  CHECK(stress(hyper({{0, 0}, {1, 0}}), d2, WeightRule::unit, 1.0) == 0.0);
  CHECK(distortion(hyper({{0, 0}, {0.5, 0}}, 0.5), d2) == doctest::Approx(0.0));

  const DistanceMatrix d3 = apsp(path_graph(3));
  const Layout perfect = hyper({{-0.3, 0}, {0.2, 0}, {0.7, 0}}, 0.5);
  CHECK(stress(perfect, d3, WeightRule::inverse_square, 0.5) == doctest::Approx(0.0).scale(1));
  CHECK(distortion(perfect, d3) == doctest::Approx(0.0).scale(1));

  // Pair (0, 2) has d = 2 and realized 1: weight 1/4 times (1 - 2)^2.
  const Layout bent = hyper({{0, 0}, {1, 0}, {1, 0.0}});
  CHECK(stress(hyper({{0, 0}, {1, 0}, {1, 0}}), d3, WeightRule::inverse_square, 1.0) ==
        doctest::Approx(0.25 + 1.0));
  CHECK(distortion(bent, d3) == doctest::Approx((0.0 + 0.5 + 1.0) / 3.0));

  CHECK(distortion(hyper({{0, 0}}), DistanceMatrix(1, {0.0})) == 0.0);
}

TEST_CASE("stress is invariant under node relabeling") {
  std::mt19937_64 rng(2);
  const Graph g = random_graph(20, 40, 3);
  const DistanceMatrix d = apsp(g);
  const Layout l = random_layout(Geometry::hyperbolic, 20, rng);
  std::vector<std::size_t> perm(20);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> pd(400);
  std::vector<LobachevskyPoint> pp(20);
  for (std::size_t i = 0; i < 20; ++i) {
    pp[perm[i]] = l.points<LobachevskyPoint>()[i];
    for (std::size_t j = 0; j < 20; ++j) pd[perm[i] * 20 + perm[j]] = d(i, j);
  }
  const DistanceMatrix dp(20, pd);
  const Layout lp = hyper(pp);
  CHECK(stress(lp, dp, WeightRule::inverse_square, 0.7) ==
        doctest::Approx(stress(l, d, WeightRule::inverse_square, 0.7)).epsilon(1e-12));
  CHECK(distortion(lp, dp) == doctest::Approx(distortion(l, d)).epsilon(1e-12));
}

TEST_CASE("euclidean distortion is scale invariant") {
  std::mt19937_64 rng(5);
  const DistanceMatrix d = apsp(cycle_graph(15));
  Layout l = random_layout(Geometry::euclidean, 15, rng);
  Layout scaled = l;
  for (auto& p : scaled.points<EuclideanPoint>()) p = {3 * p.x, 3 * p.y};
  scaled.alpha = 3 * l.alpha;
  CHECK(distortion(scaled, d) == doctest::Approx(distortion(l, d)).epsilon(1e-12));
}

TEST_CASE("agreement with brute force") {
  std::mt19937_64 rng(7);
  for (auto geom : {Geometry::euclidean, Geometry::hyperbolic, Geometry::spherical}) {
    for (int rep = 0; rep < 5; ++rep) {
      const std::size_t n = 5 + rep * 5;
      const Graph g = random_graph(n, 2 * n, rep);
      const DistanceMatrix d = apsp(g);
      Layout l = random_layout(geom, n, rng);
      l.alpha = 0.8;
      const oracle::DistanceFn lib = [&](std::size_t i, std::size_t j) { return layout_distance(l, i, j); };
      const oracle::DistanceFn ref = [&](std::size_t i, std::size_t j) { return oracle::distance(l, i, j); };
      for (bool inv : {false, true}) {
        const WeightRule rule = inv ? WeightRule::inverse_square : WeightRule::unit;
        CHECK(stress(l, d, rule, 0.8) == oracle::brute_stress(n, lib, d, inv, 0.8));
        CHECK(stress(l, d, rule, 0.8) == doctest::Approx(oracle::brute_stress(n, ref, d, inv, 0.8)).epsilon(1e-9));
      }
      CHECK(distortion(l, d) == oracle::brute_distortion(n, lib, d, 0.8));
      CHECK(distortion(l, d) == doctest::Approx(oracle::brute_distortion(n, ref, d, 0.8)).epsilon(1e-9));
    }
  }
}

TEST_CASE("quality report and comparison") {
  const Graph g = binary_tree(3);
  const DistanceMatrix d = apsp(g);
  SgdParams p;
  p.seed = 4;
  const MdsResult r = run_mds(d, Geometry::hyperbolic, p);
  const QualityReport q = quality_report(r, d, WeightRule::inverse_square, 4);
  CHECK(q.geometry == Geometry::hyperbolic);
  CHECK(q.alpha == r.layout.alpha);
  CHECK(q.stress == stress(r.layout, d, WeightRule::inverse_square, r.layout.alpha));
  CHECK(q.distortion == distortion(r.layout, d));
  CHECK(q.iterations_run == 20);
  CHECK(q.seed == 4);
  const std::string text = report_text(q);
  CHECK(text.find("geometry\thyperbolic") != std::string::npos);
  CHECK(text.find("seed\t4") != std::string::npos);

  CHECK(seed_range(3, 10) == std::vector<std::uint64_t>{10, 11, 12});
  const auto seeds = seed_range(3);
  const GeometryComparison c = compare_geometries(g, p, seeds);
  REQUIRE(c.rows.size() == 3);
  CHECK(c.rows[0].geometry == Geometry::euclidean);
  CHECK(c.rows[1].geometry == Geometry::spherical);
  CHECK(c.rows[2].geometry == Geometry::hyperbolic);
  for (const auto& row : c.rows) {
    CHECK(row.runs.size() == 3);
    double sum = 0.0;
    for (const auto& run : row.runs) sum += run.distortion;
    CHECK(row.mean_distortion == doctest::Approx(sum / 3.0));
  }
  const auto best = std::min_element(c.rows.begin(), c.rows.end(), [](const auto& a, const auto& b) {
    return a.mean_distortion < b.mean_distortion;
  });
  CHECK(c.best == best->geometry);
  CHECK(comparison_tsv(c).find("hyperbolic\t") != std::string::npos);
  CHECK(!comparison_table(c).empty());
}
