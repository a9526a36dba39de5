#include "hyperlay/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperlay {

namespace {

const std::vector<EuclideanPoint>& require_euclidean(const Layout& l, const char* what) {
  if (l.geometry() != Geometry::euclidean) throw std::invalid_argument(std::string(what) + " needs a Euclidean layout");
  return l.points<EuclideanPoint>();
}

template <class F>
Layout map_euclidean(const Layout& l, F&& f) {
  Layout out = l;
  for (auto& p : out.points<EuclideanPoint>()) p = f(p);
  for (auto& poly : out.polygons)
    for (auto& p : std::get<std::vector<EuclideanPoint>>(poly.vertices)) p = f(p);
  return out;
}

LobachevskyPoint lift(const EuclideanPoint& p) {
  const double r = std::hypot(p.x, p.y);
  if (r == 0.0) return {};
  return polar_to_lobachevsky(HyperbolicPolar(lambert_inverse_radius(r), std::atan2(p.y, p.x)));
}

std::vector<LobachevskyPoint> lift_all(const std::vector<EuclideanPoint>& pts) {
  std::vector<LobachevskyPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(lift(p));
  return out;
}

}  // namespace

Layout euclidean_layout(const Graph& g) {
  if (!g.has_positions()) throw std::invalid_argument("graph has no node positions");
  std::vector<EuclideanPoint> pts;
  pts.reserve(g.size());
  for (const auto& n : g.nodes()) pts.push_back(*n.position);
  Layout l{std::move(pts), 1.0, "input", {}};
  for (const auto& poly : g.polygons()) l.polygons.push_back({poly.cluster, poly.color, poly.vertices});
  return l;
}

Layout center_layout(const Layout& l) {
  const auto& pts = require_euclidean(l, "center_layout");
  if (pts.empty()) return l;
  double cx = 0.0, cy = 0.0;
  for (const auto& p : pts) {
    cx += p.x;
    cy += p.y;
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  return map_euclidean(l, [&](EuclideanPoint p) { return EuclideanPoint{p.x - cx, p.y - cy}; });
}

Layout coverage_scale(const Layout& l, double coverage, double rho_base) {
  if (!(coverage >= kMinCoverage && coverage <= kMaxCoverage))
    throw std::invalid_argument("coverage must lie in [0.5, 1.5]");
  if (!(rho_base > 0.0)) throw std::invalid_argument("rho_base must be positive");
  const auto& pts = require_euclidean(l, "coverage_scale");
  double far = 0.0;
  for (const auto& p : pts) far = std::max(far, std::hypot(p.x, p.y));
  if (far == 0.0) return l;
  const double s = lambert_radius(coverage * rho_base) / far;
  return map_euclidean(l, [s](EuclideanPoint p) { return EuclideanPoint{s * p.x, s * p.y}; });
}

Layout project_to_hyperbolic(const Layout& l) {
  const auto& pts = require_euclidean(l, "project_to_hyperbolic");
  Layout out;
  out.coords = lift_all(pts);
  out.alpha = l.alpha;
  out.method = l.method;
  for (const auto& poly : l.polygons)
    out.polygons.push_back({poly.cluster, poly.color, lift_all(std::get<std::vector<EuclideanPoint>>(poly.vertices))});
  return out;
}

Layout project_pipeline(const Layout& euclidean, double coverage, double rho_base) {
  Layout out = project_to_hyperbolic(coverage_scale(center_layout(euclidean), coverage, rho_base));
  out.method = "project";
  return out;
}

PoincarePoint clamp_disk(const PoincarePoint& p, double clamp) {
  const DiskReal r = p.radius();
  if (r <= clamp) return p;
  return PoincarePoint(p.z() * (static_cast<DiskReal>(clamp) / r));
}

PoincarePoint to_display(const LobachevskyPoint& a, double clamp) {
  const double rho = lobachevsky_distance({}, a);
  const double theta = rho > 0.0 ? std::atan2(std::sinh(a.v), std::sinh(a.u) * std::cosh(a.v)) : 0.0;
  const double capped = std::isfinite(rho) ? std::min(rho, kMaxHyperbolicRadius) : kMaxHyperbolicRadius;
  return clamp_disk(polar_to_poincare(HyperbolicPolar(capped, std::isfinite(theta) ? theta : 0.0)), clamp);
}

std::vector<PoincarePoint> to_display(const Layout& l, double clamp) {
  if (l.geometry() != Geometry::hyperbolic) throw std::invalid_argument("to_display needs a hyperbolic layout");
  std::vector<PoincarePoint> out;
  out.reserve(l.size());
  for (const auto& a : l.points<LobachevskyPoint>()) out.push_back(to_display(a, clamp));
  return out;
}

}  // namespace hyperlay
