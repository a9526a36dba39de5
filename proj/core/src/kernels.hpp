#pragma once

// Geometry-generic inner loops shared by the solvers and the metrics.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hyperlay/geometry.hpp"
#include "hyperlay/graph.hpp"
#include "hyperlay/hmds.hpp"
#include "hyperlay/layout.hpp"

namespace hyperlay::detail {

inline constexpr double kJitter = 1e-6;
// Pairs closer than this are treated as coincident.
inline constexpr double kCoincident = 1e-12;

template <class Point>
struct SpaceFor;
template <>
struct SpaceFor<EuclideanPoint> {
  using type = EuclideanPlane;
};
template <>
struct SpaceFor<LobachevskyPoint> {
  using type = HyperbolicPlane;
};
template <>
struct SpaceFor<SpherePoint> {
  using type = UnitSphere;
};

inline double uniform_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
}

inline EuclideanPoint jitter(const EuclideanPoint& p, std::mt19937_64& rng, double size = kJitter) {
  const double th = uniform_angle(rng);
  return exp_map(p, Vec2{size * std::cos(th), size * std::sin(th)});
}

inline LobachevskyPoint jitter(const LobachevskyPoint& p, std::mt19937_64& rng, double size = kJitter) {
  const double th = uniform_angle(rng);
  return exp_map(p, Vec2{size * std::cos(th) / std::cosh(p.v), size * std::sin(th)});
}

inline SpherePoint jitter(const SpherePoint& p, std::mt19937_64& rng, double size = kJitter) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const Vec3 r{gauss(rng), gauss(rng), gauss(rng)};
    const Vec3 t = r - dot(r, p.vec()) * p.vec();
    const double len = norm(t);
    if (len > 1e-9) return exp_map(p, (size / len) * t);
  }
}

inline bool is_zero(Vec2 t) { return t.x == 0.0 && t.y == 0.0; }
inline bool is_zero(Vec3 t) { return t.x == 0.0 && t.y == 0.0 && t.z == 0.0; }

/// Moves x[i] and x[j] along their connecting geodesic so that their distance
/// changes by mu (target - delta). Returns the distance before the step.
template <class Space>
double step_pair(std::vector<typename Space::Point>& x, std::size_t i, std::size_t j, double target, double mu,
                 std::mt19937_64& rng) {
  auto& a = x[i];
  auto& b = x[j];
  double delta = Space::distance(a, b);
  auto ga = Space::gradient(a, b);
  auto gb = Space::gradient(b, a);
  for (int tries = 0; (delta < kCoincident || is_zero(ga) || is_zero(gb)) && tries < 8; ++tries) {
    a = jitter(a, rng);
    delta = Space::distance(a, b);
    ga = Space::gradient(a, b);
    gb = Space::gradient(b, a);
  }
  const double r = 0.5 * mu * (delta - target);
  if (r == 0.0) return delta;
  a = Space::exp(a, (-r) * ga);
  b = Space::exp(b, (-r) * gb);
  return delta;
}

template <class Point>
double stress_of(const std::vector<Point>& x, const DistanceMatrix& d, WeightRule rule, double alpha) {
  using Space = typename SpaceFor<Point>::type;
  double total = 0.0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = d(i, j);
      const double r = Space::distance(x[i], x[j]) - alpha * dij;
      total += pair_weight(rule, dij) * r * r;
    }
  }
  return total;
}

template <class Point>
double distortion_of(const std::vector<Point>& x, const DistanceMatrix& d, double alpha) {
  using Space = typename SpaceFor<Point>::type;
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = d(i, j);
      total += std::abs(Space::distance(x[i], x[j]) / alpha - dij) / dij;
    }
  }
  return total / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace hyperlay::detail
