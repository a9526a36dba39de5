#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperlay/graph.hpp"
#include "hyperlay/hmds.hpp"
#include "hyperlay/layout.hpp"

namespace hyperlay {

/// sum_{i<j} w_ij (dist(X_i, X_j) - alpha d_ij)^2
double stress(const Layout& l, const DistanceMatrix& d, WeightRule rule, double alpha);

/// Mean relative error over all pairs, |dist(X_i, X_j) / alpha - d_ij| / d_ij,
/// with alpha taken from the layout. Zero for fewer than two nodes.
double distortion(const Layout& l, const DistanceMatrix& d);

struct QualityReport {
  double stress = 0.0;
  double distortion = 0.0;
  Geometry geometry = Geometry::euclidean;
  double alpha = 1.0;
  double wall_time_seconds = 0.0;
  int iterations_run = 0;
  std::uint64_t seed = 0;
};

QualityReport quality_report(const MdsResult& r, const DistanceMatrix& d, WeightRule rule, std::uint64_t seed);

struct GeometryRow {
  Geometry geometry = Geometry::euclidean;
  double mean_distortion = 0.0;
  double mean_stress = 0.0;
  double mean_seconds = 0.0;
  std::vector<QualityReport> runs;
};

struct GeometryComparison {
  /// Euclidean, spherical, hyperbolic, in that order.
  std::vector<GeometryRow> rows;
  Geometry best = Geometry::euclidean;
};

/// seeds base, base+1, ..., base+count-1
std::vector<std::uint64_t> seed_range(std::size_t count, std::uint64_t base = 0);

/// run_mds in every geometry with that geometry's heuristic alpha, once per
/// seed. `base` supplies every other parameter; its alpha mode and seed are
/// overridden, and its init mode applies to the hyperbolic runs only (the
/// others always start at random).
GeometryComparison compare_geometries(const DistanceMatrix& d, const SgdParams& base,
                                      std::span<const std::uint64_t> seeds);
GeometryComparison compare_geometries(const Graph& g, const SgdParams& base, std::span<const std::uint64_t> seeds);

/// Tab-separated rows: geometry, mean distortion, mean stress, mean seconds, runs.
std::string comparison_tsv(const GeometryComparison& c);
/// Aligned plain-text table with the winning geometry marked.
std::string comparison_table(const GeometryComparison& c);
/// One key/value line per field.
std::string report_text(const QualityReport& r);

}  // namespace hyperlay
