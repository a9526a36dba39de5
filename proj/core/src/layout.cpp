#include "hyperlay/layout.hpp"

#include <stdexcept>
#include <string>

namespace hyperlay {

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::euclidean: return "euclidean";
    case Geometry::hyperbolic: return "hyperbolic";
    case Geometry::spherical: return "spherical";
  }
  return "unknown";
}

Geometry geometry_from_string(std::string_view name) {
  if (name == "euclidean") return Geometry::euclidean;
  if (name == "hyperbolic") return Geometry::hyperbolic;
  if (name == "spherical") return Geometry::spherical;
  throw std::invalid_argument("unknown geometry '" + std::string(name) + "'");
}

Geometry geometry_of(const Coordinates& c) {
  switch (c.index()) {
    case 0: return Geometry::euclidean;
    case 1: return Geometry::hyperbolic;
    default: return Geometry::spherical;
  }
}

std::size_t size_of(const Coordinates& c) {
  return std::visit([](const auto& v) { return v.size(); }, c);
}

double layout_distance(const Layout& l, std::size_t i, std::size_t j) {
  switch (l.geometry()) {
    case Geometry::euclidean: {
      const auto& p = l.points<EuclideanPoint>();
      return euclidean_distance(p[i], p[j]);
    }
    case Geometry::hyperbolic: {
      const auto& p = l.points<LobachevskyPoint>();
      return lobachevsky_distance(p[i], p[j]);
    }
    case Geometry::spherical: {
      const auto& p = l.points<SpherePoint>();
      return sphere_distance(p[i], p[j]);
    }
  }
  return 0.0;
}

}  // namespace hyperlay
