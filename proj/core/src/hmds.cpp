#include "hyperlay/hmds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperlay/projection.hpp"
#include "kernels.hpp"

namespace hyperlay {

namespace {

using detail::SpaceFor;
using Clock = std::chrono::steady_clock;

// Independent streams derived from one user seed.
enum Stream : std::uint32_t { kInit = 1, kPairs = 2, kJitter = 3 };

std::mt19937_64 make_rng(std::uint64_t seed, Stream stream, std::uint32_t extra = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), extra};
  return std::mt19937_64(seq);
}

void require_matching(const Layout& l, const DistanceMatrix& d) {
  if (l.size() != d.size()) throw std::invalid_argument("layout and distance matrix sizes differ");
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be positive and finite");
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int iteration_budget(const SgdParams& p) {
  const int n = p.stop == StopRule::fixed_iterations ? p.iterations : p.max_iterations;
  if (n < 0) throw std::invalid_argument("iteration count must be nonnegative");
  return n;
}

template <class Point>
double max_move(const std::vector<Point>& before, const std::vector<Point>& after) {
  using Space = typename SpaceFor<Point>::type;
  double m = 0.0;
  for (std::size_t k = 0; k < before.size(); ++k) m = std::max(m, Space::distance(before[k], after[k]));
  return m;
}

// --- random initialization ---

std::vector<EuclideanPoint> random_euclidean(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit;
  std::vector<EuclideanPoint> out(n);
  for (auto& p : out) {
    const double r = std::sqrt(unit(rng));
    const double th = 2.0 * std::numbers::pi * unit(rng);
    p = {r * std::cos(th), r * std::sin(th)};
  }
  return out;
}

std::vector<LobachevskyPoint> random_hyperbolic(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit;
  std::vector<LobachevskyPoint> out(n);
  const double span = std::cosh(1.0) - 1.0;
  for (auto& p : out) {
    // Inverse CDF of the area measure sinh(rho) d rho on [0, 1].
    const double rho = std::acosh(1.0 + unit(rng) * span);
    const double th = 2.0 * std::numbers::pi * unit(rng);
    p = polar_to_lobachevsky(HyperbolicPolar(rho, th));
  }
  return out;
}

std::vector<SpherePoint> random_sphere(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit;
  std::vector<SpherePoint> out;
  out.reserve(n);
  const double span = 1.0 - std::cos(1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double c = 1.0 - unit(rng) * span;
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double th = 2.0 * std::numbers::pi * unit(rng);
    out.emplace_back(Vec3{s * std::cos(th), s * std::sin(th), c});
  }
  return out;
}

// --- SGD ---

template <class Point>
void sgd_loop(std::vector<Point>& x, const DistanceMatrix& d, double alpha, const SgdParams& params,
              const PairSource& source, MdsResult& result) {
  using Space = typename SpaceFor<Point>::type;
  const std::size_t n = x.size();
  const Schedule sched = Schedule::make(params.schedule, d.max(), d.min(), params.t_max, params.epsilon);
  const int budget = iteration_budget(params);
  const bool convergence = params.stop == StopRule::convergence;
  auto jitter = make_rng(params.seed, kJitter);

  if (params.record_trace) result.trace.push_back({0, detail::stress_of(x, d, params.weights, alpha), 0.0});

  std::vector<NodePair> pairs;
  std::vector<Point> before;
  double elapsed = 0.0;
  for (int t = 0; t < budget; ++t) {
    const auto start = Clock::now();
    const double eta = schedule_eta(sched, std::min(t, sched.t_max));
    if (source)
      source(t, pairs);
    else
      pair_order(n, params.shuffle, params.seed, t, pairs);
    before = x;
    for (const auto& [i, j] : pairs) {
      const double dij = d(i, j);
      const double mu = std::min(1.0, eta * pair_weight(params.weights, dij));
      detail::step_pair<Space>(x, i, j, alpha * dij, mu, jitter);
    }
    const double moved = max_move(before, x);
    elapsed += seconds_since(start);
    ++result.iterations_run;
    if (params.record_trace)
      result.trace.push_back({t + 1, detail::stress_of(x, d, params.weights, alpha), moved});
    if (convergence && moved < params.tolerance) break;
  }
  result.seconds = elapsed;
}

// --- full gradient descent ---

template <class Point>
using TangentOf = decltype(SpaceFor<Point>::type::gradient(std::declval<Point>(), std::declval<Point>()));

template <class Point>
double stress_gradient(const std::vector<Point>& x, const DistanceMatrix& d, WeightRule rule, double alpha,
                       std::vector<TangentOf<Point>>& grad) {
  using Space = typename SpaceFor<Point>::type;
  const std::size_t n = x.size();
  grad.assign(n, TangentOf<Point>{});
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = d(i, j);
      const double w = pair_weight(rule, dij);
      const double delta = Space::distance(x[i], x[j]);
      const double r = delta - alpha * dij;
      total += w * r * r;
      if (delta < detail::kCoincident) continue;
      const double c = 2.0 * w * r;
      grad[i] += c * Space::gradient(x[i], x[j]);
      grad[j] += c * Space::gradient(x[j], x[i]);
    }
  }
  return total;
}

template <class Point>
void gd_loop(std::vector<Point>& x, const DistanceMatrix& d, double alpha, const SgdParams& params,
             MdsResult& result) {
  using Space = typename SpaceFor<Point>::type;
  constexpr double kArmijo = 1e-4;
  constexpr int kMaxHalvings = 60;
  const std::size_t n = x.size();
  const Schedule sched = Schedule::make(params.schedule, d.max(), d.min(), params.t_max, params.epsilon);
  const int budget = iteration_budget(params);
  const bool convergence = params.stop == StopRule::convergence;

  std::vector<TangentOf<Point>> grad;
  std::vector<Point> trial(n);
  double current = detail::stress_of(x, d, params.weights, alpha);
  if (params.record_trace) result.trace.push_back({0, current, 0.0});

  double elapsed = 0.0;
  for (int t = 0; t < budget; ++t) {
    const auto start = Clock::now();
    current = stress_gradient(x, d, params.weights, alpha, grad);
    double slope = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double g = Space::norm(x[k], grad[k]);
      slope += g * g;
    }
    if (slope == 0.0) break;

    double step = schedule_eta(sched, std::min(t, sched.t_max));
    double next = current;
    bool accepted = false;
    for (int h = 0; h <= kMaxHalvings; ++h, step *= 0.5) {
      for (std::size_t k = 0; k < n; ++k) trial[k] = Space::exp(x[k], (-step) * grad[k]);
      next = detail::stress_of(trial, d, params.weights, alpha);
      if (next <= current - kArmijo * step * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      elapsed += seconds_since(start);
      break;
    }
    const double moved = max_move(x, trial);
    x.swap(trial);
    current = next;
    elapsed += seconds_since(start);
    ++result.iterations_run;
    if (params.record_trace) result.trace.push_back({t + 1, current, moved});
    if (convergence && moved < params.tolerance) break;
  }
  result.seconds = elapsed;
}

Layout with_meta(Layout l, double alpha, std::string method) {
  l.alpha = alpha;
  l.method = std::move(method);
  return l;
}

}  // namespace

double pair_weight(WeightRule rule, double d) { return rule == WeightRule::unit ? 1.0 : 1.0 / (d * d); }

void pair_order(std::size_t n, ShuffleMode mode, std::uint64_t seed, int t, std::vector<NodePair>& out) {
  out.clear();
  if (n < 2) return;
  const std::size_t total = n * (n - 1) / 2;
  out.reserve(total);
  auto rng = make_rng(seed, kPairs, static_cast<std::uint32_t>(t));
  switch (mode) {
    case ShuffleMode::reshuffle:
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
      std::shuffle(out.begin(), out.end(), rng);
      break;
    case ShuffleMode::replacement: {
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
      while (out.size() < total) {
        const std::uint32_t i = pick(rng), j = pick(rng);
        if (i != j) out.emplace_back(i, j);
      }
      break;
    }
    case ShuffleMode::index_shuffle: {
      std::vector<std::uint32_t> idx(n);
      for (std::uint32_t k = 0; k < n; ++k) idx[k] = k;
      std::shuffle(idx.begin(), idx.end(), rng);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(idx[a], idx[b]);
      break;
    }
  }
}

std::vector<NodePair> pair_order(std::size_t n, ShuffleMode mode, std::uint64_t seed, int t) {
  std::vector<NodePair> out;
  pair_order(n, mode, seed, t, out);
  return out;
}

Layout init_layout(const DistanceMatrix& d, InitMode mode, Geometry geometry, double alpha, std::uint64_t seed) {
  const std::size_t n = d.size();
  auto rng = make_rng(seed, kInit);
  if (mode == InitMode::smart) {
    if (geometry != Geometry::hyperbolic) throw std::invalid_argument("smart initialization is hyperbolic only");
    require_alpha(alpha);
    Layout flat{random_euclidean(n, rng), alpha, "init", {}};
    if (n >= 2) {
      SgdParams p;
      p.iterations = 5;
      p.t_max = 5;
      p.seed = seed;
      p.record_trace = false;
      flat = run_sgd(std::move(flat), d, alpha, p).layout;
    }
    Layout lifted = project_to_hyperbolic(center_layout(flat));
    return with_meta(std::move(lifted), alpha, "init");
  }
  switch (geometry) {
    case Geometry::euclidean: return Layout{random_euclidean(n, rng), alpha, "init", {}};
    case Geometry::hyperbolic: return Layout{random_hyperbolic(n, rng), alpha, "init", {}};
    case Geometry::spherical: return Layout{random_sphere(n, rng), alpha, "init", {}};
  }
  throw std::invalid_argument("unknown geometry");
}

Layout init_layout(const Graph& g, InitMode mode, Geometry geometry, double alpha, std::uint64_t seed) {
  return init_layout(apsp(g), mode, geometry, alpha, seed);
}

void sgd_step_pair(Layout& l, std::size_t i, std::size_t j, const DistanceMatrix& d, double alpha, double eta,
                   double w, std::mt19937_64& jitter) {
  require_matching(l, d);
  if (i == j || i >= l.size() || j >= l.size()) throw std::invalid_argument("sgd_step_pair needs distinct valid nodes");
  const double mu = std::min(1.0, eta * w);
  const double target = alpha * d(i, j);
  std::visit(
      [&](auto& x) {
        using Point = typename std::decay_t<decltype(x)>::value_type;
        detail::step_pair<typename SpaceFor<Point>::type>(x, i, j, target, mu, jitter);
      },
      l.coords);
}

double heuristic_alpha(Geometry geometry, double d_max) {
  if (!(d_max > 0.0)) return 1.0;
  switch (geometry) {
    case Geometry::hyperbolic: return 10.0 / d_max;
    case Geometry::spherical: return std::numbers::pi / d_max;
    case Geometry::euclidean: return 1.0;
  }
  return 1.0;
}

AlphaSearchResult search_alpha(const DistanceMatrix& d, Geometry geometry, const SgdParams& params) {
  if (geometry == Geometry::euclidean) throw std::invalid_argument("alpha search is meaningless for Euclidean geometry");
  if (params.search.probes < 2) throw std::invalid_argument("alpha search needs at least 2 probes");
  if (d.size() < 2) return {1.0, 0.0, {}};

  const double lo0 = 0.1 / d.max();
  const double hi0 = (geometry == Geometry::hyperbolic ? 20.0 : std::numbers::pi) / d.max();

  SgdParams inner = params;
  inner.alpha_mode = AlphaMode::fixed;
  inner.stop = StopRule::fixed_iterations;
  inner.iterations = params.search.iterations;
  inner.t_max = std::min(params.t_max, params.search.iterations);
  inner.record_trace = false;

  AlphaSearchResult result;
  auto probe = [&](double alpha) {
    inner.alpha = alpha;
    const MdsResult r = run_mds(d, geometry, inner);
    const double dist = std::visit([&](const auto& x) { return detail::distortion_of(x, d, alpha); }, r.layout.coords);
    result.probes.push_back({alpha, dist});
    return dist;
  };

  // Both bracket ends count as probes, so an optimum on the boundary is found.
  if (params.search.probes >= 4) {
    probe(lo0);
    probe(hi0);
  }
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo0, b = hi0;
  double c = b - g * (b - a), e = a + g * (b - a);
  double fc = probe(c), fe = probe(e);
  while (static_cast<int>(result.probes.size()) < params.search.probes) {
    if (fc <= fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - g * (b - a);
      fc = probe(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + g * (b - a);
      fe = probe(e);
    }
  }
  const auto best = std::min_element(result.probes.begin(), result.probes.end(),
                                     [](const AlphaProbe& x, const AlphaProbe& y) { return x.distortion < y.distortion; });
  result.alpha = best->alpha;
  result.distortion = best->distortion;
  return result;
}

double resolve_alpha(const DistanceMatrix& d, Geometry geometry, const SgdParams& params) {
  switch (params.alpha_mode) {
    case AlphaMode::fixed: require_alpha(params.alpha); return params.alpha;
    case AlphaMode::heuristic: return heuristic_alpha(geometry, d.max());
    case AlphaMode::search: return search_alpha(d, geometry, params).alpha;
  }
  throw std::invalid_argument("unknown alpha mode");
}

double resolve_alpha(const Graph& g, Geometry geometry, const SgdParams& params) {
  return resolve_alpha(apsp(g), geometry, params);
}

MdsResult run_sgd(Layout initial, const DistanceMatrix& d, double alpha, const SgdParams& params,
                  const PairSource& pairs) {
  require_matching(initial, d);
  require_alpha(alpha);
  MdsResult result;
  if (d.size() >= 2)
    std::visit([&](auto& x) { sgd_loop(x, d, alpha, params, pairs, result); }, initial.coords);
  result.layout = with_meta(std::move(initial), alpha, "hmds");
  return result;
}

MdsResult run_gd(Layout initial, const DistanceMatrix& d, double alpha, const SgdParams& params) {
  require_matching(initial, d);
  require_alpha(alpha);
  MdsResult result;
  if (d.size() >= 2) std::visit([&](auto& x) { gd_loop(x, d, alpha, params, result); }, initial.coords);
  result.layout = with_meta(std::move(initial), alpha, "gd");
  return result;
}

MdsResult run_mds(const DistanceMatrix& d, Geometry geometry, const SgdParams& params) {
  const double alpha = resolve_alpha(d, geometry, params);
  return run_sgd(init_layout(d, params.init, geometry, alpha, params.seed), d, alpha, params);
}

MdsResult run_mds(const Graph& g, Geometry geometry, const SgdParams& params) {
  return run_mds(apsp(g), geometry, params);
}

MdsResult run_gd(const DistanceMatrix& d, Geometry geometry, const SgdParams& params) {
  const double alpha = resolve_alpha(d, geometry, params);
  return run_gd(init_layout(d, params.init, geometry, alpha, params.seed), d, alpha, params);
}

MdsResult run_gd(const Graph& g, Geometry geometry, const SgdParams& params) { return run_gd(apsp(g), geometry, params); }

}  // namespace hyperlay
