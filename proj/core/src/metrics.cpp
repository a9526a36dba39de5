#include "hyperlay/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "kernels.hpp"

namespace hyperlay {

namespace {

void require_matching(const Layout& l, const DistanceMatrix& d) {
  if (l.size() != d.size()) throw std::invalid_argument("layout and distance matrix sizes differ");
}

}  // namespace

double stress(const Layout& l, const DistanceMatrix& d, WeightRule rule, double alpha) {
  require_matching(l, d);
  return std::visit([&](const auto& x) { return detail::stress_of(x, d, rule, alpha); }, l.coords);
}

double distortion(const Layout& l, const DistanceMatrix& d) {
  require_matching(l, d);
  if (!(l.alpha > 0.0)) throw std::invalid_argument("layout alpha must be positive");
  return std::visit([&](const auto& x) { return detail::distortion_of(x, d, l.alpha); }, l.coords);
}

QualityReport quality_report(const MdsResult& r, const DistanceMatrix& d, WeightRule rule, std::uint64_t seed) {
  QualityReport q;
  q.stress = stress(r.layout, d, rule, r.layout.alpha);
  q.distortion = distortion(r.layout, d);
  q.geometry = r.layout.geometry();
  q.alpha = r.layout.alpha;
  q.wall_time_seconds = r.seconds;
  q.iterations_run = r.iterations_run;
  q.seed = seed;
  return q;
}

std::vector<std::uint64_t> seed_range(std::size_t count, std::uint64_t base) {
  std::vector<std::uint64_t> s(count);
  for (std::size_t k = 0; k < count; ++k) s[k] = base + k;
  return s;
}

GeometryComparison compare_geometries(const DistanceMatrix& d, const SgdParams& base,
                                      std::span<const std::uint64_t> seeds) {
  if (seeds.empty()) throw std::invalid_argument("compare_geometries needs at least one seed");
  GeometryComparison out;
  for (Geometry geo : {Geometry::euclidean, Geometry::spherical, Geometry::hyperbolic}) {
    GeometryRow row;
    row.geometry = geo;
    for (std::uint64_t seed : seeds) {
      SgdParams p = base;
      p.alpha_mode = AlphaMode::heuristic;
      p.init = geo == Geometry::hyperbolic ? base.init : InitMode::random;
      p.seed = seed;
      p.record_trace = false;
      const QualityReport q = quality_report(run_mds(d, geo, p), d, p.weights, seed);
      row.mean_distortion += q.distortion;
      row.mean_stress += q.stress;
      row.mean_seconds += q.wall_time_seconds;
      row.runs.push_back(q);
    }
    const double k = static_cast<double>(seeds.size());
    row.mean_distortion /= k;
    row.mean_stress /= k;
    row.mean_seconds /= k;
    out.rows.push_back(std::move(row));
  }
  out.best = std::min_element(out.rows.begin(), out.rows.end(), [](const GeometryRow& a, const GeometryRow& b) {
               return a.mean_distortion < b.mean_distortion;
             })->geometry;
  return out;
}

GeometryComparison compare_geometries(const Graph& g, const SgdParams& base, std::span<const std::uint64_t> seeds) {
  return compare_geometries(apsp(g), base, seeds);
}

std::string comparison_tsv(const GeometryComparison& c) {
  std::string s = "geometry\tmean_distortion\tmean_stress\tmean_seconds\truns\n";
  for (const auto& r : c.rows)
    s += fmt::format("{}\t{:.6f}\t{:.6f}\t{:.6f}\t{}\n", to_string(r.geometry), r.mean_distortion, r.mean_stress,
                     r.mean_seconds, r.runs.size());
  return s;
}

std::string comparison_table(const GeometryComparison& c) {
  std::string s = fmt::format("{:<12} {:>12} {:>14} {:>10}\n", "geometry", "distortion", "stress", "seconds");
  for (const auto& r : c.rows)
    s += fmt::format("{:<12} {:>12.4f} {:>14.4f} {:>10.4f}{}\n", to_string(r.geometry), r.mean_distortion,
                     r.mean_stress, r.mean_seconds, r.geometry == c.best ? "  *" : "");
  s += fmt::format("best: {} (mean over {} runs)\n", to_string(c.best), c.rows.empty() ? 0 : c.rows[0].runs.size());
  return s;
}

std::string report_text(const QualityReport& r) {
  return fmt::format(
      "geometry\t{}\nalpha\t{:.12g}\nstress\t{:.12g}\ndistortion\t{:.12g}\nwall_time_seconds\t{:.6f}\n"
      "iterations_run\t{}\nseed\t{}\n",
      to_string(r.geometry), r.alpha, r.stress, r.distortion, r.wall_time_seconds, r.iterations_run, r.seed);
}

}  // namespace hyperlay
