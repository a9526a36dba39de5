#pragma once

// Coordinate systems of the three constant-curvature planes, their distance
// functions, gradients and geodesic moves.
//
// Hyperbolic points are held in Lobachevsky (axial) coordinates (u, v): u is
// the signed distance along a fixed axis geodesic, v the signed distance from
// that axis. They embed in the hyperboloid model as
//
//     (x, y, z) = (sinh u cosh v, sinh v, cosh u cosh v),
//
// and the Riemannian metric in these coordinates is ds^2 = cosh^2 v du^2 + dv^2.
// Display and navigation use the Poincare disk, where the same point sits at
// (x + iy) / (1 + z).

#include <complex>
#include <numbers>

namespace hyperlay {

/// Disk coordinates degrade near the boundary (resolution ~ eps / (1 - |z|)),
/// so the Poincare model is carried in extended precision.
using DiskReal = long double;
using DiskComplex = std::complex<DiskReal>;

/// Radii beyond this overflow exp() in the display transform.
inline constexpr double kMaxHyperbolicRadius = 700.0;

/// Slack allowed when clamping acosh/atanh arguments back into their domain.
inline constexpr double kDomainTolerance = 1e-12;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
  Vec3& operator+=(Vec3 o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

double dot(Vec3 a, Vec3 b);
Vec3 cross(Vec3 a, Vec3 b);
double norm(Vec3 a);
double norm(Vec2 a);

/// A point of the Euclidean plane, in layout units.
struct EuclideanPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const EuclideanPoint&, const EuclideanPoint&) = default;
};

/// A point of the hyperbolic plane in Lobachevsky coordinates. Every pair of
/// reals is a valid point.
struct LobachevskyPoint {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const LobachevskyPoint&, const LobachevskyPoint&) = default;
};

/// A point strictly inside the unit disk.
class PoincarePoint {
 public:
  PoincarePoint() = default;
  /// Throws std::domain_error unless |z| < 1.
  explicit PoincarePoint(DiskComplex z);
  PoincarePoint(DiskReal x, DiskReal y) : PoincarePoint(DiskComplex(x, y)) {}

  const DiskComplex& z() const { return z_; }
  DiskReal radius() const { return std::abs(z_); }
  double x() const { return static_cast<double>(z_.real()); }
  double y() const { return static_cast<double>(z_.imag()); }

  friend bool operator==(const PoincarePoint&, const PoincarePoint&) = default;

 private:
  DiskComplex z_{};
};

/// Geodesic polar coordinates about the origin.
class HyperbolicPolar {
 public:
  HyperbolicPolar() = default;
  /// Throws std::domain_error for negative or non-finite rho; theta is
  /// reduced to [0, 2pi).
  HyperbolicPolar(double rho, double theta);

  double rho() const { return rho_; }
  double theta() const { return theta_; }

 private:
  double rho_ = 0.0;
  double theta_ = 0.0;
};

/// A point on the unit sphere. Construction normalizes the input; vectors
/// already of unit length to within rounding are kept unchanged.
class SpherePoint {
 public:
  SpherePoint() = default;
  /// Throws std::domain_error for the zero vector or non-finite input.
  SpherePoint(double x, double y, double z);
  explicit SpherePoint(Vec3 p) : SpherePoint(p.x, p.y, p.z) {}

  const Vec3& vec() const { return p_; }
  double x() const { return p_.x; }
  double y() const { return p_.y; }
  double z() const { return p_.z; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  Vec3 p_{0.0, 0.0, 1.0};
};

/// The disk automorphism carrying z0 to the origin.
class MobiusTranslation {
 public:
  MobiusTranslation() = default;
  explicit MobiusTranslation(PoincarePoint z0) : z0_(z0) {}

  const PoincarePoint& origin() const { return z0_; }

 private:
  PoincarePoint z0_{};
};

// --- domain-safe inverse functions ------------------------------------------

/// acosh with arguments in [1 - kDomainTolerance, 1) clamped to 1.
double safe_acosh(double x);
/// atanh with |x| in [1, 1 + kDomainTolerance] clamped just inside (-1, 1).
DiskReal safe_atanh(DiskReal x);

// --- Poincare disk -----------------------------------------------------------

/// f(z) = (z - z0) / (1 - conj(z0) z).
PoincarePoint mobius_apply(const MobiusTranslation& t, const PoincarePoint& z);
/// Inverse of mobius_apply: y -> (y + z0) / (1 + conj(z0) y).
PoincarePoint mobius_unapply(const MobiusTranslation& t, const PoincarePoint& y);

double poincare_distance(const PoincarePoint& p, const PoincarePoint& q);

/// Disk radius tanh(rho / 2) at angle theta. Throws std::overflow_error when
/// rho exceeds kMaxHyperbolicRadius; callers clamp before converting.
PoincarePoint polar_to_poincare(const HyperbolicPolar& hp);
HyperbolicPolar poincare_to_polar(const PoincarePoint& p);

// --- Lobachevsky coordinates -------------------------------------------------

double lobachevsky_distance(const LobachevskyPoint& a, const LobachevskyPoint& b);

PoincarePoint lobachevsky_to_poincare(const LobachevskyPoint& a);
/// Throws std::domain_error when |p| >= 1 (only reachable through raw values).
LobachevskyPoint poincare_to_lobachevsky(const PoincarePoint& p);

LobachevskyPoint polar_to_lobachevsky(const HyperbolicPolar& hp);
HyperbolicPolar lobachevsky_to_polar(const LobachevskyPoint& a);

/// Riemannian gradient of d(., b) at a, in the coordinate basis (d/du, d/dv).
/// Unit length in the metric; points toward increasing distance. Zero when
/// a == b.
Vec2 distance_gradient(const LobachevskyPoint& a, const LobachevskyPoint& b);

/// Metric length of the tangent vector t at a.
double riemannian_norm(const LobachevskyPoint& a, Vec2 t);

/// Follows the geodesic leaving a with velocity t for unit time.
LobachevskyPoint exp_map(const LobachevskyPoint& a, Vec2 t);

// --- sphere and plane --------------------------------------------------------

/// Great-circle distance in [0, pi].
double sphere_distance(const SpherePoint& p, const SpherePoint& q);
/// Unit tangent at p pointing away from q. Zero for coincident or antipodal
/// points.
Vec3 sphere_gradient(const SpherePoint& p, const SpherePoint& q);
SpherePoint exp_map(const SpherePoint& p, Vec3 t);

double euclidean_distance(const EuclideanPoint& a, const EuclideanPoint& b);
Vec2 euclidean_gradient(const EuclideanPoint& a, const EuclideanPoint& b);
inline EuclideanPoint exp_map(const EuclideanPoint& a, Vec2 t) { return {a.x + t.x, a.y + t.y}; }

// --- hyperbolic Lambert azimuthal projection ---------------------------------

/// Radius map of the inverse hyperbolic Lambert azimuthal projection,
/// f(r) = acosh(r^2 / 2 + 1). Area-preserving: 2pi (cosh f(r) - 1) = pi r^2.
/// Throws std::domain_error for negative r.
double lambert_inverse_radius(double r);
/// Inverse of lambert_inverse_radius: r = 2 sinh(rho / 2).
double lambert_radius(double rho);

// --- geodesic spaces ---------------------------------------------------------
//
// Uniform static interface used by the optimizers:
//   distance(a, b), gradient(a, b) (unit, away from b), exp(a, t), norm(a, t).

struct EuclideanPlane {
  using Point = EuclideanPoint;
  using Tangent = Vec2;
  static double distance(const Point& a, const Point& b) { return euclidean_distance(a, b); }
  static Tangent gradient(const Point& a, const Point& b) { return euclidean_gradient(a, b); }
  static Point exp(const Point& a, Tangent t) { return exp_map(a, t); }
  static double norm(const Point&, Tangent t) { return hyperlay::norm(t); }
};

struct HyperbolicPlane {
  using Point = LobachevskyPoint;
  using Tangent = Vec2;
  static double distance(const Point& a, const Point& b) { return lobachevsky_distance(a, b); }
  static Tangent gradient(const Point& a, const Point& b) { return distance_gradient(a, b); }
  static Point exp(const Point& a, Tangent t) { return exp_map(a, t); }
  static double norm(const Point& a, Tangent t) { return riemannian_norm(a, t); }
};

struct UnitSphere {
  using Point = SpherePoint;
  using Tangent = Vec3;
  static double distance(const Point& a, const Point& b) { return sphere_distance(a, b); }
  static Tangent gradient(const Point& a, const Point& b) { return sphere_gradient(a, b); }
  static Point exp(const Point& a, Tangent t) { return exp_map(a, t); }
  static double norm(const Point&, Tangent t) { return hyperlay::norm(t); }
};

}  // namespace hyperlay
