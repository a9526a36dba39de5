#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperlay/geometry.hpp"

namespace hyperlay {

enum class Geometry { euclidean, hyperbolic, spherical };

std::string_view to_string(Geometry g);
/// Throws std::invalid_argument for unknown names.
Geometry geometry_from_string(std::string_view name);

/// Per-node coordinates; the alternative determines the geometry.
using Coordinates =
    std::variant<std::vector<EuclideanPoint>, std::vector<LobachevskyPoint>, std::vector<SpherePoint>>;

Geometry geometry_of(const Coordinates& c);
std::size_t size_of(const Coordinates& c);

struct LayoutPolygon {
  int cluster = 0;
  std::string color;
  Coordinates vertices;
};

/// Output of every layout method: coordinates in one geometry, the scale
/// applied to graph distances, and where the layout came from.
struct Layout {
  Coordinates coords;
  double alpha = 1.0;
  std::string method;
  std::vector<LayoutPolygon> polygons;

  Geometry geometry() const { return geometry_of(coords); }
  std::size_t size() const { return size_of(coords); }

  template <class Point>
  const std::vector<Point>& points() const {
    return std::get<std::vector<Point>>(coords);
  }
  template <class Point>
  std::vector<Point>& points() {
    return std::get<std::vector<Point>>(coords);
  }
};

/// Geodesic distance between nodes i and j in the layout's geometry.
double layout_distance(const Layout& l, std::size_t i, std::size_t j);

}  // namespace hyperlay
