#pragma once

// Kamada-Kawai layout in the hyperbolic plane. Each node in turn is moved in
// the tangent plane at its own position, where distances from it are exact,
// and mapped back into the Poincare disk.

#include <cstdint>
#include <span>
#include <vector>

#include "hyperlay/geometry.hpp"
#include "hyperlay/graph.hpp"
#include "hyperlay/hmds.hpp"
#include "hyperlay/layout.hpp"

namespace hyperlay {

struct ForceParams {
  /// Full passes over the nodes.
  int max_iterations = 200;
  ScheduleKind schedule = ScheduleKind::exponential;
  int t_max = 20;
  double epsilon = 0.1;
  /// Stop once no node moves this far (hyperbolic units) during a pass.
  double tolerance = 1e-3;
  /// Largest disk radius any node may take.
  double clamp = 0.999;
  /// Target distances are alpha * d_ij.
  double alpha = 1.0;
  bool record_trace = true;
};

/// E = sum_{i<j} 1/2 k_ij (dist(p_i, p_j) - alpha d_ij)^2 with k_ij = d_ij^-2.
double kk_energy(const Layout& l, const DistanceMatrix& d, const ForceParams& p);

/// Images of all nodes in the tangent plane at `center`: the center goes to
/// the origin and every other node to (distance from center, angle at center).
std::vector<EuclideanPoint> tangent_map(std::size_t center, std::span<const PoincarePoint> z);
std::vector<EuclideanPoint> tangent_map(std::size_t center, const Layout& l);

/// Position of the center after moving it to `moved` in its tangent plane.
/// The disk radius is clamped before and after translating back.
PoincarePoint tangent_unmap(const PoincarePoint& center, EuclideanPoint moved, double clamp = 0.999);
LobachevskyPoint tangent_unmap(std::size_t center, EuclideanPoint moved, const Layout& l, double clamp = 0.999);

struct ForceResult {
  Layout layout;
  /// Energy after each pass (entry 0 is the initial layout).
  std::vector<TraceEntry> trace;
  int passes = 0;
  double seconds = 0.0;
};

ForceResult run_force(const DistanceMatrix& d, const ForceParams& p, std::uint64_t seed);
/// Starts from the same random initialization as run_mds.
ForceResult run_force(Layout initial, const DistanceMatrix& d, const ForceParams& p, std::uint64_t seed);
Layout layout_force(const Graph& g, const DistanceMatrix& d, const ForceParams& p, std::uint64_t seed);

}  // namespace hyperlay
