#include "hyperlay/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperlay {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest representable radius strictly inside the unit disk.
constexpr DiskReal kMaxDiskRadius = 1.0L - std::numeric_limits<DiskReal>::epsilon();

// Rounding can push an analytically interior point onto the boundary.
DiskComplex pull_inside(DiskComplex z) {
  const DiskReal r = std::abs(z);
  if (r >= 1.0L) return z * (kMaxDiskRadius / r);
  return z;
}

}  // namespace

double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }

PoincarePoint::PoincarePoint(DiskComplex z) : z_(z) {
  const DiskReal r = std::abs(z);
  if (!(r < 1.0L)) throw std::domain_error("PoincarePoint must lie strictly inside the unit disk");
}

HyperbolicPolar::HyperbolicPolar(double rho, double theta) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw std::domain_error("hyperbolic radius must be finite and >= 0");
  if (!std::isfinite(theta)) throw std::domain_error("angle must be finite");
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kTwoPi) theta = 0.0;
  rho_ = rho;
  theta_ = theta;
}

SpherePoint::SpherePoint(double x, double y, double z) {
  const double n = norm(Vec3{x, y, z});
  if (!(n > 0.0) || !std::isfinite(n)) throw std::domain_error("sphere point needs a finite nonzero vector");
  // Unit vectors (to rounding) are kept bit-exact so serialization round-trips.
  if (std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) {
    p_ = {x, y, z};
  } else {
    p_ = {x / n, y / n, z / n};
  }
}

double safe_acosh(double x) {
  if (x >= 1.0) return std::acosh(x);
  if (x >= 1.0 - kDomainTolerance) return 0.0;
  throw std::domain_error("acosh argument below 1");
}

DiskReal safe_atanh(DiskReal x) {
  const DiskReal ax = std::abs(x);
  if (ax < 1.0L) return std::atanh(x);
  if (ax <= 1.0L + kDomainTolerance) return std::copysign(std::atanh(kMaxDiskRadius), x);
  throw std::domain_error("atanh argument outside (-1, 1)");
}

PoincarePoint mobius_apply(const MobiusTranslation& t, const PoincarePoint& z) {
  const DiskComplex z0 = t.origin().z();
  return PoincarePoint(pull_inside((z.z() - z0) / (1.0L - std::conj(z0) * z.z())));
}

PoincarePoint mobius_unapply(const MobiusTranslation& t, const PoincarePoint& y) {
  const DiskComplex z0 = t.origin().z();
  return PoincarePoint(pull_inside((y.z() + z0) / (1.0L + std::conj(z0) * y.z())));
}

double poincare_distance(const PoincarePoint& p, const PoincarePoint& q) {
  // Equivalent to 2 atanh |(q - p) / (1 - conj(p) q)|, without the
  // cancellation atanh suffers near 1.
  const DiskReal rp = p.radius();
  const DiskReal rq = q.radius();
  const DiskReal gap = std::abs(p.z() - q.z());
  const DiskReal scale = std::sqrt((1.0L - rp) * (1.0L + rp) * (1.0L - rq) * (1.0L + rq));
  return static_cast<double>(2.0L * std::asinh(gap / scale));
}

PoincarePoint polar_to_poincare(const HyperbolicPolar& hp) {
  if (hp.rho() > kMaxHyperbolicRadius) throw std::overflow_error("hyperbolic radius exceeds the display limit");
  const DiskReal r = std::tanh(static_cast<DiskReal>(hp.rho()) / 2.0L);
  return PoincarePoint(pull_inside(std::polar(r, static_cast<DiskReal>(hp.theta()))));
}

HyperbolicPolar poincare_to_polar(const PoincarePoint& p) {
  const DiskReal r = p.radius();
  const double theta = r > 0.0L ? static_cast<double>(std::arg(p.z())) : 0.0;
  return HyperbolicPolar(static_cast<double>(2.0L * safe_atanh(r)), theta);
}

double lobachevsky_distance(const LobachevskyPoint& a, const LobachevskyPoint& b) {
  // cosh d = cosh(du) cosh v1 cosh v2 - sinh v1 sinh v2, rearranged so both
  // terms of cosh d - 1 = 2 sinh^2(d/2) are nonnegative.
  const double su = std::sinh(0.5 * (a.u - b.u));
  const double sv = std::sinh(0.5 * (a.v - b.v));
  const double s = std::cosh(a.v) * std::cosh(b.v) * su * su + sv * sv;
  return 2.0 * std::asinh(std::sqrt(s));
}

PoincarePoint lobachevsky_to_poincare(const LobachevskyPoint& a) {
  const DiskReal u = a.u;
  const DiskReal v = a.v;
  const DiskReal cv = std::cosh(v);
  const DiskReal x = std::sinh(u) * cv;
  const DiskReal y = std::sinh(v);
  const DiskReal z = std::cosh(u) * cv;
  return PoincarePoint(pull_inside(DiskComplex(x, y) / (1.0L + z)));
}

LobachevskyPoint poincare_to_lobachevsky(const PoincarePoint& p) {
  const DiskComplex w = p.z();
  const DiskReal r = std::abs(w);
  if (!(r < 1.0L)) throw std::domain_error("point is not inside the unit disk");
  const DiskReal denom = (1.0L - r) * (1.0L + r);
  const DiskReal x = 2.0L * w.real() / denom;
  const DiskReal y = 2.0L * w.imag() / denom;
  const DiskReal v = std::asinh(y);
  const DiskReal u = std::asinh(x / std::sqrt(1.0L + y * y));
  return {static_cast<double>(u), static_cast<double>(v)};
}

LobachevskyPoint polar_to_lobachevsky(const HyperbolicPolar& hp) {
  const double sr = std::sinh(hp.rho());
  const double y = sr * std::sin(hp.theta());
  const double x = sr * std::cos(hp.theta());
  return {std::asinh(x / std::sqrt(1.0 + y * y)), std::asinh(y)};
}

HyperbolicPolar lobachevsky_to_polar(const LobachevskyPoint& a) {
  const double rho = lobachevsky_distance({0.0, 0.0}, a);
  const double theta = rho > 0.0 ? std::atan2(std::sinh(a.v), std::sinh(a.u) * std::cosh(a.v)) : 0.0;
  return HyperbolicPolar(rho, theta);
}

Vec2 distance_gradient(const LobachevskyPoint& a, const LobachevskyPoint& b) {
  const double du = a.u - b.u;
  const double sh = std::sinh(0.5 * du);
  const double sv = std::sinh(0.5 * (a.v - b.v));
  const double cva = std::cosh(a.v);
  const double cvb = std::cosh(b.v);
  const double s = cva * cvb * sh * sh + sv * sv;
  if (!(s > 0.0)) return {};

  // Coordinate partials of d; the common 1/sinh d factor drops out after
  // normalization.
  const double pu = cva * cvb * std::sinh(du);
  const double pv = 2.0 * sh * sh * std::sinh(a.v) * cvb + std::sinh(a.v - b.v);

  // Raise the index with the inverse metric diag(1/cosh^2 v, 1).
  const Vec2 g{pu / (cva * cva), pv};
  const double len = riemannian_norm(a, g);
  if (!(len > 0.0)) return {};
  return (1.0 / len) * g;
}

double riemannian_norm(const LobachevskyPoint& a, Vec2 t) {
  return std::hypot(std::cosh(a.v) * t.x, t.y);
}

LobachevskyPoint exp_map(const LobachevskyPoint& a, Vec2 t) {
  // Work at u = 0 (translation along the axis is an isometry), move on the
  // hyperboloid, and read the coordinates back.
  const double cv = std::cosh(a.v);
  const double sv = std::sinh(a.v);
  const double tx = t.x * cv;
  const double ty = t.y * cv;
  const double len = std::hypot(tx, t.y);
  if (!(len > 0.0)) return a;

  const double c = std::cosh(len);
  const double k = std::sinh(len) / len;
  const double x = k * tx;
  const double y = c * sv + k * ty;
  const double v = std::asinh(y);
  const double u = std::asinh(x / std::sqrt(1.0 + y * y));
  return {a.u + u, v};
}

double sphere_distance(const SpherePoint& p, const SpherePoint& q) {
  return std::atan2(norm(cross(p.vec(), q.vec())), dot(p.vec(), q.vec()));
}

Vec3 sphere_gradient(const SpherePoint& p, const SpherePoint& q) {
  const Vec3 toward = q.vec() - dot(p.vec(), q.vec()) * p.vec();
  const double len = norm(toward);
  if (!(len > 1e-15)) return {};
  return (-1.0 / len) * toward;
}

SpherePoint exp_map(const SpherePoint& p, Vec3 t) {
  const double len = norm(t);
  if (!(len > 0.0)) return p;
  return SpherePoint(std::cos(len) * p.vec() + (std::sin(len) / len) * t);
}

double euclidean_distance(const EuclideanPoint& a, const EuclideanPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Vec2 euclidean_gradient(const EuclideanPoint& a, const EuclideanPoint& b) {
  const Vec2 d{a.x - b.x, a.y - b.y};
  const double len = norm(d);
  if (!(len > 0.0)) return {};
  return (1.0 / len) * d;
}

double lambert_inverse_radius(double r) {
  if (!(r >= 0.0)) throw std::domain_error("Euclidean radius must be >= 0");
  // acosh(r^2/2 + 1) == 2 asinh(r/2), which stays accurate for small r.
  return 2.0 * std::asinh(0.5 * r);
}

double lambert_radius(double rho) {
  if (!(rho >= 0.0)) throw std::domain_error("hyperbolic radius must be >= 0");
  return 2.0 * std::sinh(0.5 * rho);
}

}  // namespace hyperlay
