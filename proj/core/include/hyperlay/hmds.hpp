#pragma once

// Metric multidimensional scaling of graph distances in the Euclidean plane,
// the hyperbolic plane and the unit sphere, solved by stochastic gradient
// descent over node pairs. A full-gradient solver is kept as a baseline.
//
// Both solvers minimize the scaled stress
//
//     sum_{i<j} w_ij (dist(X_i, X_j) - alpha d_ij)^2.

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "hyperlay/graph.hpp"
#include "hyperlay/layout.hpp"

namespace hyperlay {

// --- learning rate -----------------------------------------------------------

enum class ScheduleKind { exponential, inverse_t, inverse_sqrt_t };

/// Learning-rate schedule over iterations 0..t_max.
///
///   exponential     eta_max e^{-b t},      b = ln(eta_max / eta_min) / t_max
///   inverse_t       a / (1 + b t),         b = (a / eta_min - 1) / t_max
///   inverse_sqrt_t  a / sqrt(1 + b t),     b = ((a / eta_min)^2 - 1) / t_max
///
/// with eta_max = d_max^2, eta_min = epsilon d_min^2 and a = d_min^2, so every
/// kind ends at eta_min.
struct Schedule {
  ScheduleKind kind = ScheduleKind::exponential;
  double eta_max = 1.0;
  double eta_min = 0.1;
  double a = 1.0;
  double b = 0.0;
  int t_max = 20;

  static Schedule make(ScheduleKind kind, double d_max, double d_min, int t_max = 20, double epsilon = 0.1);
};

/// Throws std::out_of_range unless 0 <= t <= t_max.
double schedule_eta(const Schedule& s, int t);

// --- parameters --------------------------------------------------------------

enum class ShuffleMode { replacement, index_shuffle, reshuffle };
enum class InitMode { random, smart };
enum class WeightRule { unit, inverse_square };
enum class AlphaMode { fixed, heuristic, search };
enum class StopRule { fixed_iterations, convergence };

struct AlphaSearchParams {
  int probes = 20;
  /// Iterations of each inner run.
  int iterations = 15;
};

struct SgdParams {
  ScheduleKind schedule = ScheduleKind::exponential;
  int t_max = 20;
  double epsilon = 0.1;
  /// Iterations run under StopRule::fixed_iterations. Iterations past t_max
  /// use eta_min.
  int iterations = 20;
  ShuffleMode shuffle = ShuffleMode::reshuffle;
  InitMode init = InitMode::random;
  AlphaMode alpha_mode = AlphaMode::heuristic;
  /// Scale used when alpha_mode is fixed.
  double alpha = 1.0;
  AlphaSearchParams search;
  WeightRule weights = WeightRule::inverse_square;
  StopRule stop = StopRule::fixed_iterations;
  /// Convergence threshold on the largest per-node move in one iteration.
  double tolerance = 1e-3;
  /// Iteration cap under StopRule::convergence.
  int max_iterations = 1000;
  std::uint64_t seed = 0;
  /// Evaluate stress after every iteration (O(n^2) each).
  bool record_trace = true;
};

std::string_view to_string(ScheduleKind k);
std::string_view to_string(ShuffleMode m);
std::string_view to_string(InitMode m);
ScheduleKind schedule_from_string(std::string_view s);
ShuffleMode shuffle_from_string(std::string_view s);
InitMode init_from_string(std::string_view s);

double pair_weight(WeightRule rule, double d);

struct TraceEntry {
  int iteration = 0;
  double stress = 0.0;
  double max_displacement = 0.0;
};

struct MdsResult {
  Layout layout;
  std::vector<TraceEntry> trace;
  int iterations_run = 0;
  /// Wall time of the optimization loop (distances and initialization
  /// excluded).
  double seconds = 0.0;
};

// --- building blocks ---------------------------------------------------------

using NodePair = std::pair<std::uint32_t, std::uint32_t>;

/// Pairs visited in iteration t.
///   reshuffle      every pair i < j exactly once, freshly permuted per (seed, t)
///   replacement    C(n,2) independent uniform draws of i != j
///   index_shuffle  pairs in lexicographic order over a permuted index array
void pair_order(std::size_t n, ShuffleMode mode, std::uint64_t seed, int t, std::vector<NodePair>& out);
std::vector<NodePair> pair_order(std::size_t n, ShuffleMode mode, std::uint64_t seed, int t);

/// Initial coordinates. Random mode samples uniformly (in the geometry's area
/// measure) within geodesic radius 1 of the origin; smart mode (hyperbolic
/// only) runs 5 Euclidean SGD iterations against alpha * d and lifts the
/// result with the inverse Lambert projection. Throws std::invalid_argument
/// for smart mode outside the hyperbolic plane.
Layout init_layout(const DistanceMatrix& d, InitMode mode, Geometry geometry, double alpha, std::uint64_t seed);
Layout init_layout(const Graph& g, InitMode mode, Geometry geometry, double alpha, std::uint64_t seed);

/// One SGD update of the pair (i, j): with mu = min(1, eta w), both nodes move
/// mu (delta - alpha d_ij) / 2 along the geodesic joining them. Coincident
/// (or antipodal) pairs are first separated by a 1e-6 random jitter drawn
/// from `jitter`.
void sgd_step_pair(Layout& l, std::size_t i, std::size_t j, const DistanceMatrix& d, double alpha, double eta,
                   double w, std::mt19937_64& jitter);

/// Default scale: hyperbolic 10 / d_max, spherical pi / d_max, Euclidean 1.
double heuristic_alpha(Geometry geometry, double d_max);

struct AlphaProbe {
  double alpha = 0.0;
  double distortion = 0.0;
};

struct AlphaSearchResult {
  double alpha = 0.0;
  double distortion = 0.0;
  std::vector<AlphaProbe> probes;
};

/// Golden-section search for the alpha minimizing distortion, over
/// [0.1, 20] / d_max (hyperbolic) or [0.1, pi] / d_max (spherical). The two
/// interval ends are among the probes (when there are at least 4). Every
/// probe reuses params.seed. Returns the best probe. Throws
/// std::invalid_argument for Euclidean geometry, which is scale invariant.
AlphaSearchResult search_alpha(const DistanceMatrix& d, Geometry geometry, const SgdParams& params);

/// Resolves params.alpha_mode to a value.
double resolve_alpha(const DistanceMatrix& d, Geometry geometry, const SgdParams& params);
double resolve_alpha(const Graph& g, Geometry geometry, const SgdParams& params);

/// Supplies the pair sequence of iteration t. Defaults to pair_order.
using PairSource = std::function<void(int t, std::vector<NodePair>& out)>;

/// SGD from a given initial layout with a resolved alpha.
MdsResult run_sgd(Layout initial, const DistanceMatrix& d, double alpha, const SgdParams& params,
                  const PairSource& pairs = {});

/// Full-gradient descent from a given initial layout. Each iteration takes the
/// exact Riemannian gradient of the stress over all pairs and a backtracking
/// (Armijo) line search whose first trial step is the schedule's eta(t).
MdsResult run_gd(Layout initial, const DistanceMatrix& d, double alpha, const SgdParams& params);

/// Distances, alpha, initialization and optimization in one call.
MdsResult run_mds(const Graph& g, Geometry geometry, const SgdParams& params);
MdsResult run_mds(const DistanceMatrix& d, Geometry geometry, const SgdParams& params);
MdsResult run_gd(const Graph& g, Geometry geometry, const SgdParams& params);
MdsResult run_gd(const DistanceMatrix& d, Geometry geometry, const SgdParams& params);

}  // namespace hyperlay
