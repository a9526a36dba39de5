#pragma once

// Lifts a precomputed Euclidean drawing into the hyperbolic plane with the
// inverse hyperbolic Lambert azimuthal projection, and maps hyperbolic layouts
// to Poincare-disk display coordinates.

#include <vector>

#include "hyperlay/geometry.hpp"
#include "hyperlay/graph.hpp"
#include "hyperlay/layout.hpp"

namespace hyperlay {

/// Hyperbolic radius of the farthest node at coverage 1.
inline constexpr double kDefaultRhoBase = 6.0;
/// Nodes are kept at least 0.001 inside the disk boundary.
inline constexpr double kDefaultClamp = 0.999;
inline constexpr double kMinCoverage = 0.5;
inline constexpr double kMaxCoverage = 1.5;

/// Euclidean layout from the graph's node positions and polygons. Throws
/// std::invalid_argument when any node lacks a position.
Layout euclidean_layout(const Graph& g);

/// Translates nodes and polygons so the node centroid is the origin.
Layout center_layout(const Layout& l);

/// Scales a centered layout so its farthest node lands, after projection, at
/// hyperbolic radius coverage * rho_base. Throws std::invalid_argument for
/// coverage outside [0.5, 1.5].
Layout coverage_scale(const Layout& l, double coverage, double rho_base = kDefaultRhoBase);

/// (r, theta) -> (acosh(r^2/2 + 1), theta) for every node and polygon vertex.
Layout project_to_hyperbolic(const Layout& l);

/// center_layout, coverage_scale and project_to_hyperbolic in sequence.
Layout project_pipeline(const Layout& euclidean, double coverage = 1.0, double rho_base = kDefaultRhoBase);

/// Scales p toward the origin so that |p| <= clamp.
PoincarePoint clamp_disk(const PoincarePoint& p, double clamp);

/// Poincare position tanh(rho/2) e^{i theta}, with rho capped at
/// kMaxHyperbolicRadius and the disk radius capped at `clamp`.
PoincarePoint to_display(const LobachevskyPoint& a, double clamp = kDefaultClamp);
std::vector<PoincarePoint> to_display(const Layout& l, double clamp = kDefaultClamp);

}  // namespace hyperlay
