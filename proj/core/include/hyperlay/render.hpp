#pragma once

#include <string>
#include <vector>

#include "hyperlay/geometry.hpp"
#include "hyperlay/graph.hpp"
#include "hyperlay/layout.hpp"

namespace hyperlay {

struct RenderStyle {
  /// Stroke opacity of edges, [0, 1].
  double edge_opacity = 1.0;
  /// Label size at the disk center in px, [0, 40]; 0 disables labels.
  double label_base_px = 15.0;
  /// Disk radius relative to disk_px, [0.5, 1.5].
  double zoom = 1.0;
  /// Largest disk radius a node is drawn at.
  double clamp = 0.999;
  /// Disk radius in px at zoom 1; the canvas is sized for this.
  int disk_px = 400;
  /// Node radius at the disk center in px.
  double node_px = 5.0;

  /// Throws std::invalid_argument for out-of-range fields.
  void validate() const;
};

/// Hyperbolic line segment between two disk points, in disk coordinates.
struct GeodesicArc {
  enum class Kind { diameter_segment, circular_arc };
  Kind kind = Kind::diameter_segment;
  EuclideanPoint from;
  EuclideanPoint to;
  // circular_arc only: the supporting circle, orthogonal to the unit circle,
  // and the angles of `from` and `to` about its center.
  EuclideanPoint center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
};

/// Throws std::invalid_argument when p == q.
GeodesicArc geodesic_arc(const PoincarePoint& p, const PoincarePoint& q);

/// label_base_px (1 - |z|^2)
double label_size(const RenderStyle& style, const PoincarePoint& z);

/// Disk positions used for drawing. Hyperbolic layouts use the Poincare
/// model; Euclidean layouts are scaled into the disk; spherical layouts use
/// an azimuthal view about (0, 0, 1) with radius proportional to the angle.
/// Every point is clamped to style.clamp.
std::vector<PoincarePoint> display_points(const Layout& l, double clamp);

/// SVG document. Edges and polygon sides are geodesics for hyperbolic
/// layouts and straight segments otherwise. Output is a pure function of the
/// arguments.
std::string render_svg(const Layout& l, const Graph& g, const RenderStyle& style);

}  // namespace hyperlay
