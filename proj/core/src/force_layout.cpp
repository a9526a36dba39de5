#include "hyperlay/force_layout.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hyperlay/projection.hpp"
#include "kernels.hpp"

namespace hyperlay {

namespace {

void validate(const ForceParams& p) {
  if (p.max_iterations < 0) throw std::invalid_argument("max_iterations must be nonnegative");
  if (!(p.tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  if (!(p.clamp > 0.0 && p.clamp < 1.0)) throw std::invalid_argument("clamp must lie in (0, 1)");
  if (!(p.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
}

std::vector<PoincarePoint> to_disk(const Layout& l) {
  if (l.geometry() != Geometry::hyperbolic) throw std::invalid_argument("force layout needs a hyperbolic layout");
  std::vector<PoincarePoint> z;
  z.reserve(l.size());
  for (const auto& a : l.points<LobachevskyPoint>()) z.push_back(lobachevsky_to_poincare(a));
  return z;
}

EuclideanPoint plane_image(const PoincarePoint& center, const PoincarePoint& other) {
  const double rho = poincare_distance(center, other);
  if (rho == 0.0) return {};
  const DiskComplex y = mobius_apply(MobiusTranslation(center), other).z();
  const double th = static_cast<double>(std::arg(y));
  return {rho * std::cos(th), rho * std::sin(th)};
}

}  // namespace

double kk_energy(const Layout& l, const DistanceMatrix& d, const ForceParams& p) {
  if (l.geometry() != Geometry::hyperbolic) throw std::invalid_argument("kk_energy needs a hyperbolic layout");
  if (l.size() != d.size()) throw std::invalid_argument("layout and distance matrix sizes differ");
  return 0.5 * detail::stress_of(l.points<LobachevskyPoint>(), d, WeightRule::inverse_square, p.alpha);
}

std::vector<EuclideanPoint> tangent_map(std::size_t center, std::span<const PoincarePoint> z) {
  if (center >= z.size()) throw std::out_of_range("tangent_map center out of range");
  std::vector<EuclideanPoint> out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j)
    if (j != center) out[j] = plane_image(z[center], z[j]);
  return out;
}

std::vector<EuclideanPoint> tangent_map(std::size_t center, const Layout& l) { return tangent_map(center, to_disk(l)); }

PoincarePoint tangent_unmap(const PoincarePoint& center, EuclideanPoint moved, double clamp) {
  const double r = std::hypot(moved.x, moved.y);
  if (r == 0.0) return clamp_disk(center, clamp);
  const DiskReal disk_r = std::tanh(static_cast<DiskReal>(r) / 2.0L);
  const DiskComplex dir(static_cast<DiskReal>(moved.x) / static_cast<DiskReal>(r),
                        static_cast<DiskReal>(moved.y) / static_cast<DiskReal>(r));
  const PoincarePoint local = clamp_disk(PoincarePoint(dir * std::min(disk_r, 1.0L - 1e-15L)), clamp);
  return clamp_disk(mobius_unapply(MobiusTranslation(center), local), clamp);
}

LobachevskyPoint tangent_unmap(std::size_t center, EuclideanPoint moved, const Layout& l, double clamp) {
  const auto z = to_disk(l);
  if (center >= z.size()) throw std::out_of_range("tangent_unmap center out of range");
  return poincare_to_lobachevsky(tangent_unmap(z[center], moved, clamp));
}

ForceResult run_force(Layout initial, const DistanceMatrix& d, const ForceParams& p, std::uint64_t seed) {
  validate(p);
  if (initial.size() != d.size()) throw std::invalid_argument("layout and distance matrix sizes differ");
  std::vector<PoincarePoint> z = to_disk(initial);
  for (auto& q : z) q = clamp_disk(q, p.clamp);
  const std::size_t n = z.size();

  ForceResult result;
  auto energy = [&] {
    Layout tmp;
    std::vector<LobachevskyPoint> pts;
    pts.reserve(n);
    for (const auto& q : z) pts.push_back(poincare_to_lobachevsky(q));
    tmp.coords = std::move(pts);
    return kk_energy(tmp, d, p);
  };

  if (n >= 2) {
    const Schedule sched = Schedule::make(p.schedule, d.max(), d.min(), p.t_max, p.epsilon);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 7u};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    if (p.record_trace) result.trace.push_back({0, energy(), 0.0});

    double elapsed = 0.0;
    for (int pass = 0; pass < p.max_iterations; ++pass) {
      const auto start = std::chrono::steady_clock::now();
      const double eta = schedule_eta(sched, std::min(pass, sched.t_max));
      std::shuffle(order.begin(), order.end(), rng);
      double moved_max = 0.0;
      for (const std::size_t m : order) {
        auto plane = tangent_map(m, z);
        bool coincident = false;
        for (std::size_t j = 0; j < n && !coincident; ++j)
          coincident = j != m && plane[j].x == 0.0 && plane[j].y == 0.0;
        if (coincident) {
          const double th = angle(rng);
          z[m] = tangent_unmap(z[m], {detail::kJitter * std::cos(th), detail::kJitter * std::sin(th)}, p.clamp);
          plane = tangent_map(m, z);
        }
        double fx = 0.0, fy = 0.0, ksum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == m) continue;
          const double dist = std::hypot(plane[j].x, plane[j].y);
          const double dij = d(m, j);
          const double k = 1.0 / (dij * dij);
          ksum += k;
          if (dist == 0.0) continue;
          const double c = k * (dist - p.alpha * dij) / dist;
          fx += c * plane[j].x;
          fy += c * plane[j].y;
        }
        const double step = std::min(eta, 1.0 / ksum);
        const PoincarePoint before = z[m];
        z[m] = tangent_unmap(z[m], {step * fx, step * fy}, p.clamp);
        moved_max = std::max(moved_max, poincare_distance(before, z[m]));
      }
      elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ++result.passes;
      if (p.record_trace) result.trace.push_back({pass + 1, energy(), moved_max});
      if (moved_max < p.tolerance) break;
    }
    result.seconds = elapsed;
  }

  std::vector<LobachevskyPoint> pts;
  pts.reserve(n);
  for (const auto& q : z) pts.push_back(poincare_to_lobachevsky(q));
  result.layout = Layout{std::move(pts), p.alpha, "force", {}};
  return result;
}

ForceResult run_force(const DistanceMatrix& d, const ForceParams& p, std::uint64_t seed) {
  return run_force(init_layout(d, InitMode::random, Geometry::hyperbolic, p.alpha, seed), d, p, seed);
}

Layout layout_force(const Graph& g, const DistanceMatrix& d, const ForceParams& p, std::uint64_t seed) {
  if (g.size() != d.size()) throw std::invalid_argument("graph and distance matrix sizes differ");
  return run_force(d, p, seed).layout;
}

}  // namespace hyperlay
