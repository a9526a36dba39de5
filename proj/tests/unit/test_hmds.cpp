#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "hyperlay/hmds.hpp"
#include "hyperlay/metrics.hpp"
#include "oracles.hpp"

using namespace hyperlay;

namespace {

DistanceMatrix p2() { return apsp(path_graph(2)); }

Layout hyper(std::vector<LobachevskyPoint> pts) {
  Layout l;
  l.coords = std::move(pts);
  return l;
}

SgdParams quiet(std::uint64_t seed) {
  SgdParams p;
  p.seed = seed;
  p.record_trace = false;
  return p;
}

}  // namespace

TEST_CASE("schedule endpoints and midpoint") {
  for (auto kind : {ScheduleKind::exponential, ScheduleKind::inverse_t, ScheduleKind::inverse_sqrt_t}) {
    const Schedule s = Schedule::make(kind, 4.0, 1.0, 20);
    CHECK(schedule_eta(s, 20) == doctest::Approx(0.1).epsilon(1e-12));
    double prev = schedule_eta(s, 0);
    for (int t = 1; t <= 20; ++t) {
      const double e = schedule_eta(s, t);
      CHECK(e < prev);
      prev = e;
    }
    CHECK_THROWS_AS(schedule_eta(s, 21), std::out_of_range);
    CHECK_THROWS_AS(schedule_eta(s, -1), std::out_of_range);
  }
  const Schedule e = Schedule::make(ScheduleKind::exponential, 4.0, 1.0, 20);
  CHECK(schedule_eta(e, 0) == doctest::Approx(16.0));
  CHECK(schedule_eta(e, 10) == doctest::Approx(std::sqrt(1.6)).epsilon(1e-12));
  CHECK(schedule_eta(e, 10) == doctest::Approx(1.2649).epsilon(1e-4));
}

TEST_CASE("pair order") {
  const auto r = pair_order(3, ShuffleMode::reshuffle, 5, 0);
  CHECK(std::set<NodePair>(r.begin(), r.end()) == std::set<NodePair>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(r.size() == 3);
  CHECK(pair_order(40, ShuffleMode::reshuffle, 5, 3) == pair_order(40, ShuffleMode::reshuffle, 5, 3));
  CHECK(pair_order(40, ShuffleMode::reshuffle, 5, 3) != pair_order(40, ShuffleMode::reshuffle, 5, 4));

  const auto rep = pair_order(3, ShuffleMode::replacement, 5, 0);
  CHECK(rep.size() == 3);
  for (const auto& [i, j] : rep) {
    CHECK(i != j);
    CHECK(i < 3);
    CHECK(j < 3);
  }
  const auto big = pair_order(30, ShuffleMode::replacement, 1, 0);
  CHECK(big.size() == 435);
  CHECK(std::set<NodePair>(big.begin(), big.end()).size() < 435);

  for (auto mode : {ShuffleMode::reshuffle, ShuffleMode::index_shuffle}) {
    const auto all = pair_order(25, mode, 9, 2);
    std::set<NodePair> seen;
    for (auto [i, j] : all) seen.insert({std::min(i, j), std::max(i, j)});
    CHECK(seen.size() == 300);
    CHECK(all.size() == 300);
  }
}

TEST_CASE("random initialization") {
  const DistanceMatrix d = apsp(cycle_graph(100));
  const Layout a = init_layout(d, InitMode::random, Geometry::hyperbolic, 1.0, 3);
  const Layout b = init_layout(d, InitMode::random, Geometry::hyperbolic, 1.0, 3);
  CHECK(a.points<LobachevskyPoint>() == b.points<LobachevskyPoint>());
  for (const auto& p : a.points<LobachevskyPoint>()) CHECK(oracle::lobachevsky_distance({0, 0}, p) <= 1.0 + 1e-12);

  const Layout s = init_layout(d, InitMode::random, Geometry::spherical, 1.0, 3);
  const SpherePoint pole(0, 0, 1);
  for (const auto& p : s.points<SpherePoint>()) CHECK(oracle::sphere_distance(pole, p) <= 1.0 + 1e-12);
  const Layout e = init_layout(d, InitMode::random, Geometry::euclidean, 1.0, 3);
  for (const auto& p : e.points<EuclideanPoint>()) CHECK(std::hypot(p.x, p.y) <= 1.0);

  CHECK_THROWS_AS(init_layout(d, InitMode::smart, Geometry::spherical, 1.0, 3), std::invalid_argument);
}

TEST_CASE("random initialization is uniform in hyperbolic area") {
  // Radius density is proportional to sinh(rho) on [0, 1].
  const double expected = oracle::simpson([](double r) { return r * std::sinh(r); }, 0, 1) /
                          oracle::simpson([](double r) { return std::sinh(r); }, 0, 1);
  const DistanceMatrix d = apsp(cycle_graph(100));
  double sum = 0.0;
  std::size_t count = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Layout a = init_layout(d, InitMode::random, Geometry::hyperbolic, 1.0, seed);
    for (const auto& p : a.points<LobachevskyPoint>()) sum += oracle::lobachevsky_distance({0, 0}, p);
    count += a.size();
  }
  // Standard error of the mean is about 0.0017.
  CHECK(sum / static_cast<double>(count) == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("single pair step") {
  const DistanceMatrix d = p2();
  std::mt19937_64 jitter(1);

  Layout a = hyper({{0, 0}, {1, 0}});
  sgd_step_pair(a, 0, 1, d, 1.0, 1.0, 1.0, jitter);
  CHECK(a.points<LobachevskyPoint>() == std::vector<LobachevskyPoint>{{0, 0}, {1, 0}});

  for (double alpha : {0.5, 2.0}) {
    Layout b = hyper({{0.3, -0.2}, {-1.1, 0.7}});
    sgd_step_pair(b, 0, 1, d, alpha, 1.0, 1.0, jitter);
    CHECK(oracle::distance(b, 0, 1) == doctest::Approx(alpha).epsilon(1e-9));

    Layout s;
    s.coords = std::vector<SpherePoint>{{1, 0.2, 0.1}, {-0.3, 1, 0.4}};
    sgd_step_pair(s, 0, 1, d, alpha, 1.0, 1.0, jitter);
    CHECK(oracle::distance(s, 0, 1) == doctest::Approx(alpha).epsilon(1e-9));
  }

  Layout capped = hyper({{0.3, -0.2}, {-1.1, 0.7}});
  Layout unit = capped;
  sgd_step_pair(capped, 0, 1, d, 0.5, 4.0, 1.0, jitter);
  sgd_step_pair(unit, 0, 1, d, 0.5, 1.0, 1.0, jitter);
  CHECK(capped.points<LobachevskyPoint>() == unit.points<LobachevskyPoint>());
}

TEST_CASE("euclidean step matches vector arithmetic") {
  const DistanceMatrix d = apsp(path_graph(3));
  std::mt19937_64 jitter(1);
  Layout l;
  l.coords = std::vector<EuclideanPoint>{{0.2, 0.1}, {5, 5}, {1.0, -0.7}};
  const EuclideanPoint a{0.2, 0.1}, b{1.0, -0.7};
  sgd_step_pair(l, 0, 2, d, 1.0, 0.1, 0.25, jitter);
  const double dx = a.x - b.x, dy = a.y - b.y;
  const double len = std::hypot(dx, dy);
  const double r = 0.025 * (len - 2.0) / 2.0;
  const auto& p = l.points<EuclideanPoint>();
  CHECK(p[0].x == doctest::Approx(a.x - r * dx / len).epsilon(1e-12));
  CHECK(p[0].y == doctest::Approx(a.y - r * dy / len).epsilon(1e-12));
  CHECK(p[2].x == doctest::Approx(b.x + r * dx / len).epsilon(1e-12));
  CHECK(p[2].y == doctest::Approx(b.y + r * dy / len).epsilon(1e-12));
  CHECK(p[1] == EuclideanPoint{5, 5});
}

TEST_CASE("coincident pair is separated") {
  std::mt19937_64 jitter(1);
  Layout l = hyper({{0.5, 0.5}, {0.5, 0.5}});
  sgd_step_pair(l, 0, 1, p2(), 1.0, 1.0, 1.0, jitter);
  CHECK(oracle::distance(l, 0, 1) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("two nodes converge in every geometry") {
  for (auto g : {Geometry::euclidean, Geometry::hyperbolic, Geometry::spherical}) {
    SgdParams p = quiet(4);
    p.alpha_mode = AlphaMode::fixed;
    p.alpha = 0.7;
    const MdsResult r = run_mds(p2(), g, p);
    CHECK(oracle::distance(r.layout, 0, 1) == doctest::Approx(0.7).epsilon(1e-4));
    CHECK(r.layout.alpha == 0.7);
    CHECK(r.layout.method == "hmds");
    const MdsResult gd = run_gd(p2(), g, p);
    CHECK(oracle::distance(gd.layout, 0, 1) == doctest::Approx(0.7).epsilon(1e-4));
    CHECK(gd.layout.method == "gd");
  }
}

TEST_CASE("trace and iteration count") {
  SgdParams p;
  p.seed = 2;
  const MdsResult r = run_mds(binary_tree(3), Geometry::hyperbolic, p);
  REQUIRE(r.trace.size() == 21);
  CHECK(r.iterations_run == 20);
  CHECK(r.trace.front().iteration == 0);
  CHECK(r.trace.back().iteration == 20);
  CHECK(r.trace.back().stress < r.trace.front().stress);
  const DistanceMatrix d = apsp(binary_tree(3));
  CHECK(r.trace.back().stress ==
        doctest::Approx(stress(r.layout, d, WeightRule::inverse_square, r.layout.alpha)).epsilon(1e-12));
}

TEST_CASE("convergence stopping") {
  SgdParams p = quiet(2);
  p.stop = StopRule::convergence;
  p.tolerance = 1e-4;
  p.max_iterations = 500;
  const MdsResult r = run_mds(cycle_graph(12), Geometry::euclidean, p);
  CHECK(r.iterations_run > 0);
  CHECK(r.iterations_run <= 500);
}

TEST_CASE("determinism") {
  for (auto g : {Geometry::euclidean, Geometry::hyperbolic, Geometry::spherical}) {
    const MdsResult a = run_mds(random_graph(30, 60, 1), g, quiet(8));
    const MdsResult b = run_mds(random_graph(30, 60, 1), g, quiet(8));
    CHECK(a.layout.coords == b.layout.coords);
  }
  SgdParams smart = quiet(8);
  smart.init = InitMode::smart;
  CHECK(run_mds(binary_tree(3), Geometry::hyperbolic, smart).layout.coords ==
        run_mds(binary_tree(3), Geometry::hyperbolic, smart).layout.coords);
}

TEST_CASE("symmetric input gives a symmetric layout") {
  // Running on the relabeled graph with the relabeled pair sequence must give
  // the relabeled layout.
  const std::size_t n = 8;
  const Graph g = cycle_graph(n);
  const DistanceMatrix d = apsp(g);
  auto sigma = [n](std::uint32_t v) { return static_cast<std::uint32_t>((3 + n - v) % n); };

  const Layout init = init_layout(d, InitMode::random, Geometry::hyperbolic, 1.0, 5);
  Layout permuted = init;
  for (std::uint32_t v = 0; v < n; ++v)
    permuted.points<LobachevskyPoint>()[sigma(v)] = init.points<LobachevskyPoint>()[v];

  SgdParams p = quiet(5);
  const PairSource base = [&](int t, std::vector<NodePair>& out) { pair_order(n, p.shuffle, p.seed, t, out); };
  const PairSource mapped = [&](int t, std::vector<NodePair>& out) {
    pair_order(n, p.shuffle, p.seed, t, out);
    for (auto& [i, j] : out) {
      i = sigma(i);
      j = sigma(j);
    }
  };
  const MdsResult a = run_sgd(init, d, 1.0, p, base);
  const MdsResult b = run_sgd(permuted, d, 1.0, p, mapped);
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto& x = a.layout.points<LobachevskyPoint>()[v];
    const auto& y = b.layout.points<LobachevskyPoint>()[sigma(v)];
    CHECK(x.u == doctest::Approx(y.u).epsilon(1e-12));
    CHECK(x.v == doctest::Approx(y.v).epsilon(1e-12));
  }
}

TEST_CASE("trees favour hyperbolic space, cycles favour the plane") {
  const Graph tree = binary_tree(5);
  const DistanceMatrix dt = apsp(tree);
  const MdsResult th = run_mds(dt, Geometry::hyperbolic, quiet(1));
  const MdsResult te = run_mds(dt, Geometry::euclidean, quiet(1));
  CHECK(distortion(th.layout, dt) < distortion(te.layout, dt));

  const DistanceMatrix dc = apsp(cycle_graph(50));
  const MdsResult ch = run_mds(dc, Geometry::hyperbolic, quiet(1));
  const MdsResult ce = run_mds(dc, Geometry::euclidean, quiet(1));
  CHECK(distortion(ce.layout, dc) < distortion(ch.layout, dc));
}

TEST_CASE("gradient descent decreases stress") {
  SgdParams p;
  p.seed = 3;
  p.iterations = 10;
  const MdsResult r = run_gd(random_graph(20, 40, 2), Geometry::hyperbolic, p);
  REQUIRE(r.trace.size() >= 2);
  for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k].stress <= r.trace[k - 1].stress);
}

TEST_CASE("alpha") {
  CHECK(heuristic_alpha(Geometry::hyperbolic, 5.0) == doctest::Approx(2.0));
  CHECK(heuristic_alpha(Geometry::spherical, 3.0) == doctest::Approx(std::numbers::pi / 3.0));
  CHECK(heuristic_alpha(Geometry::euclidean, 7.0) == 1.0);

  const DistanceMatrix d = apsp(cube_graph());
  SgdParams p = quiet(1);
  CHECK_THROWS_AS(search_alpha(d, Geometry::euclidean, p), std::invalid_argument);
  const AlphaSearchResult s = search_alpha(d, Geometry::spherical, p);
  CHECK(s.probes.size() == 20);
  CHECK(s.alpha >= 0.1 / 3.0);
  CHECK(s.alpha <= std::numbers::pi / 3.0 + 1e-12);
  for (const auto& probe : s.probes) CHECK(s.distortion <= probe.distortion);

  p.alpha_mode = AlphaMode::fixed;
  p.alpha = 0.3;
  CHECK(resolve_alpha(d, Geometry::hyperbolic, p) == 0.3);
  p.alpha_mode = AlphaMode::heuristic;
  CHECK(resolve_alpha(d, Geometry::hyperbolic, p) == doctest::Approx(10.0 / 3.0));
}

TEST_CASE("names") {
  CHECK(schedule_from_string(to_string(ScheduleKind::inverse_sqrt_t)) == ScheduleKind::inverse_sqrt_t);
  CHECK(shuffle_from_string(to_string(ShuffleMode::index_shuffle)) == ShuffleMode::index_shuffle);
  CHECK(init_from_string(to_string(InitMode::smart)) == InitMode::smart);
  CHECK_THROWS_AS(schedule_from_string("linear"), std::invalid_argument);
  CHECK(pair_weight(WeightRule::inverse_square, 2.0) == 0.25);
  CHECK(pair_weight(WeightRule::unit, 2.0) == 1.0);
}
