#include "commands.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "hyperlay/force_layout.hpp"
#include "hyperlay/graph.hpp"
#include "hyperlay/hmds.hpp"
#include "hyperlay/layout_file.hpp"
#include "hyperlay/metrics.hpp"
#include "hyperlay/projection.hpp"
#include "hyperlay/render.hpp"

namespace hyperlay::cli {

namespace {

// Carries an exit code out of a command.
struct CommandError {
  ExitCode code;
  std::string message;
};

[[noreturn]] void incompatible(const std::string& msg) { throw CommandError{kIncompatible, msg}; }

// "-" goes to `out`; anything else is written atomically.
void emit(const std::string& path, std::string_view content, std::ostream& out) {
  if (path == "-") {
    out << content;
    out.flush();
  } else {
    write_file_atomic(path, content);
  }
}

const std::map<std::string, Geometry> kGeometries{
    {"euclidean", Geometry::euclidean}, {"hyperbolic", Geometry::hyperbolic}, {"spherical", Geometry::spherical}};
const std::map<std::string, ScheduleKind> kSchedules{{"exponential", ScheduleKind::exponential},
                                                     {"inverse-t", ScheduleKind::inverse_t},
                                                     {"inverse-sqrt-t", ScheduleKind::inverse_sqrt_t}};
const std::map<std::string, ShuffleMode> kShuffles{{"reshuffle", ShuffleMode::reshuffle},
                                                   {"replacement", ShuffleMode::replacement},
                                                   {"index-shuffle", ShuffleMode::index_shuffle}};
const std::map<std::string, InitMode> kInits{{"random", InitMode::random}, {"smart", InitMode::smart}};
const std::map<std::string, WeightRule> kWeights{{"inverse-square", WeightRule::inverse_square},
                                                 {"unit", WeightRule::unit}};

bool has_extension(const std::string& path, const char* ext) {
  return std::filesystem::path(path).extension() == ext;
}

// Graph input: DOT, edge list, or the graph of a layout file (whose Euclidean
// coordinates, if any, become node positions).
Graph load_graph(const std::string& path, std::ostream& err) {
  if (has_extension(path, ".json")) {
    LayoutFile f = read_layout_file(path);
    const Layout* flat = f.euclidean_source ? &*f.euclidean_source
                         : f.layout.geometry() == Geometry::euclidean ? &f.layout
                                                                      : nullptr;
    if (!flat) return f.graph;
    std::vector<Node> nodes = f.graph.nodes();
    const auto& pts = flat->points<EuclideanPoint>();
    for (std::size_t k = 0; k < nodes.size(); ++k) nodes[k].position = pts[k];
    std::vector<GraphPolygon> polys;
    for (const auto& p : flat->polygons)
      polys.push_back({p.cluster, std::get<std::vector<EuclideanPoint>>(p.vertices), p.color});
    Graph g(std::move(nodes), f.graph.edges(), std::move(polys));
    g.require_connected();
    return g;
  }
  ParsedGraph parsed = read_graph(path);
  for (const auto& w : parsed.warnings) fmt::print(err, "warning: {}\n", w);
  return std::move(parsed.graph);
}

std::string trace_tsv(const std::vector<TraceEntry>& trace) {
  std::string s = "iteration\tstress\tmax_displacement\n";
  for (const auto& t : trace) s += fmt::format("{}\t{:.17g}\t{:.17g}\n", t.iteration, t.stress, t.max_displacement);
  return s;
}

// --- layout ---

struct LayoutArgs {
  std::string input;
  std::string method = "hmds";
  std::string geometry = "hyperbolic";
  std::optional<double> alpha;
  bool alpha_search = false;
  std::string schedule = "exponential";
  int iterations = 20;
  int t_max = 20;
  std::string shuffle = "reshuffle";
  std::string init = "random";
  std::uint64_t seed = 0;
  bool converge = false;
  double tolerance = 1e-3;
  int max_iterations = 1000;
  double coverage = 1.0;
  double rho_base = kDefaultRhoBase;
  double clamp = kDefaultClamp;
  std::string out = "-";
  std::string trace;
  CLI::Option* iterations_opt = nullptr;
};

void add_layout(CLI::App& app, LayoutArgs& a) {
  auto* cmd = app.add_subcommand("layout", "Compute a layout and write a layout file");
  cmd->add_option("input", a.input, "Graph file (.el edge list, .dot/.gv, or a .json layout file)")->required();
  cmd->add_option("--method", a.method, "Layout method")
      ->check(CLI::IsMember({"project", "force", "hmds"}))
      ->capture_default_str();
  cmd->add_option("--geometry", a.geometry, "Target geometry")
      ->check(CLI::IsMember({"hyperbolic", "spherical", "euclidean"}))
      ->capture_default_str();
  auto* alpha = cmd->add_option("--alpha", a.alpha, "Fixed distance scale")->check(CLI::PositiveNumber);
  cmd->add_flag("--alpha-search", a.alpha_search, "Search the scale minimizing distortion")->excludes(alpha);
  cmd->add_option("--schedule", a.schedule, "Learning-rate schedule")
      ->check(CLI::IsMember({"exponential", "inverse-t", "inverse-sqrt-t"}))
      ->capture_default_str();
  a.iterations_opt =
      cmd->add_option("--iterations", a.iterations, "SGD iterations (force: passes)")->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd->add_option("--t-max", a.t_max, "Iteration at which the schedule reaches its minimum")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--shuffle", a.shuffle, "Pair order")
      ->check(CLI::IsMember({"reshuffle", "replacement", "index-shuffle"}))
      ->capture_default_str();
  cmd->add_option("--init", a.init, "Initialization")->check(CLI::IsMember({"random", "smart"}))->capture_default_str();
  cmd->add_option("--seed", a.seed, "Random seed")->envname("HYPERLAY_SEED")->capture_default_str();
  cmd->add_flag("--converge", a.converge, "Iterate until the largest node move drops below --tolerance");
  cmd->add_option("--tolerance", a.tolerance, "Convergence tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--max-iterations", a.max_iterations, "Iteration cap with --converge")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--coverage", a.coverage, "Projection coverage")->check(CLI::Range(0.5, 1.5))->capture_default_str();
  cmd->add_option("--rho-base", a.rho_base, "Hyperbolic radius of the farthest node at coverage 1")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--clamp", a.clamp, "Largest disk radius (force method)")
      ->check(CLI::Range(0.5, 0.999999))
      ->capture_default_str();
  cmd->add_option("--out,-o", a.out, "Output layout file ('-' for standard output)")->capture_default_str();
  cmd->add_option("--trace", a.trace, "Write the per-iteration trace as TSV");
}

int cmd_layout(const LayoutArgs& a, std::ostream& out, std::ostream& err) {
  const Geometry geo = kGeometries.at(a.geometry);
  if (a.method != "hmds" && geo != Geometry::hyperbolic)
    incompatible(fmt::format("method '{}' produces hyperbolic layouts only", a.method));
  if (a.alpha_search && a.method != "hmds") incompatible("--alpha-search applies to --method hmds only");
  if (a.alpha_search && geo == Geometry::euclidean) incompatible("--alpha-search is meaningless for Euclidean geometry");
  if (a.init == "smart" && geo != Geometry::hyperbolic) incompatible("--init smart needs hyperbolic geometry");

  const Graph g = load_graph(a.input, err);
  LayoutFile file;
  file.graph = g;
  file.seed = a.seed;

  WeightRule weights = WeightRule::inverse_square;
  double seconds = 0.0;
  int iterations_run = 0;
  if (a.method == "project") {
    if (!g.has_positions()) incompatible("method 'project' needs node positions (DOT pos attributes)");
    Layout flat = euclidean_layout(g);
    file.layout = project_pipeline(flat, a.coverage, a.rho_base);
    file.euclidean_source = std::move(flat);
  } else if (a.method == "force") {
    ForceParams p;
    p.schedule = kSchedules.at(a.schedule);
    p.t_max = a.t_max;
    p.tolerance = a.tolerance;
    p.clamp = a.clamp;
    p.alpha = a.alpha.value_or(1.0);
    if (a.iterations_opt->count() > 0) p.max_iterations = a.iterations;
    ForceResult r = run_force(apsp(g), p, a.seed);
    seconds = r.seconds;
    iterations_run = r.passes;
    file.layout = std::move(r.layout);
    file.trace = std::move(r.trace);
  } else {
    SgdParams p;
    p.schedule = kSchedules.at(a.schedule);
    p.t_max = a.t_max;
    p.iterations = a.iterations;
    p.shuffle = kShuffles.at(a.shuffle);
    p.init = kInits.at(a.init);
    p.seed = a.seed;
    p.stop = a.converge ? StopRule::convergence : StopRule::fixed_iterations;
    p.tolerance = a.tolerance;
    p.max_iterations = a.max_iterations;
    if (a.alpha) {
      p.alpha_mode = AlphaMode::fixed;
      p.alpha = *a.alpha;
    } else if (a.alpha_search) {
      p.alpha_mode = AlphaMode::search;
    }
    weights = p.weights;
    MdsResult r = run_mds(apsp(g), geo, p);
    seconds = r.seconds;
    iterations_run = r.iterations_run;
    file.layout = std::move(r.layout);
    file.trace = std::move(r.trace);
  }

  emit(a.out, to_json(file), out);
  if (!a.trace.empty()) emit(a.trace, trace_tsv(file.trace), out);

  const DistanceMatrix d = apsp(g);
  QualityReport q;
  q.geometry = file.layout.geometry();
  q.alpha = file.layout.alpha;
  q.stress = stress(file.layout, d, weights, file.layout.alpha);
  q.distortion = distortion(file.layout, d);
  q.wall_time_seconds = seconds;
  q.iterations_run = iterations_run;
  q.seed = a.seed;
  std::ostream& report = a.out == "-" ? err : out;
  fmt::print(report, "method\t{}\n{}", file.layout.method, report_text(q));
  return kOk;
}

// --- render ---

struct RenderArgs {
  std::string input;
  RenderStyle style;
  std::string out = "-";
};

void add_render(CLI::App& app, RenderArgs& a) {
  auto* cmd = app.add_subcommand("render", "Draw a layout file as SVG");
  cmd->add_option("input", a.input, "Layout file")->required();
  cmd->add_option("--edge-opacity", a.style.edge_opacity, "Edge stroke opacity")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--label-size", a.style.label_base_px, "Label size at the disk center in px (0: no labels)")
      ->check(CLI::Range(0.0, 40.0))
      ->capture_default_str();
  cmd->add_option("--zoom", a.style.zoom, "Disk size relative to the canvas")->check(CLI::Range(0.5, 1.5))->capture_default_str();
  cmd->add_option("--clamp", a.style.clamp, "Largest disk radius drawn")->check(CLI::Range(0.5, 0.999999))->capture_default_str();
  cmd->add_option("--disk-px", a.style.disk_px, "Disk radius in px")->check(CLI::Range(16, 8192))->capture_default_str();
  cmd->add_option("--node-px", a.style.node_px, "Node radius at the disk center in px")
      ->check(CLI::Range(0.0, 100.0))
      ->capture_default_str();
  cmd->add_option("--out,-o", a.out, "Output SVG file ('-' for standard output)")->capture_default_str();
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const LayoutFile f = read_layout_file(a.input);
  emit(a.out, render_svg(f.layout, f.graph, a.style), out);
  return kOk;
}

// --- metrics ---

struct MetricsArgs {
  std::string input;
  std::string weights = "inverse-square";
};

void add_metrics(CLI::App& app, MetricsArgs& a) {
  auto* cmd = app.add_subcommand("metrics", "Stress and distortion of a layout file");
  cmd->add_option("input", a.input, "Layout file")->required();
  cmd->add_option("--weights", a.weights, "Stress weights")
      ->check(CLI::IsMember({"inverse-square", "unit"}))
      ->capture_default_str();
}

int cmd_metrics(const MetricsArgs& a, std::ostream& out) {
  const LayoutFile f = read_layout_file(a.input);
  const DistanceMatrix d = apsp(f.graph);
  QualityReport q;
  q.geometry = f.layout.geometry();
  q.alpha = f.layout.alpha;
  q.stress = stress(f.layout, d, kWeights.at(a.weights), f.layout.alpha);
  q.distortion = distortion(f.layout, d);
  const int iterations = f.trace.empty() ? 0 : static_cast<int>(f.trace.size()) - 1;
  // No wall time here: the file does not record how long the layout took.
  fmt::print(out, "geometry\t{}\nalpha\t{:.12g}\nstress\t{:.12g}\ndistortion\t{:.12g}\niterations_run\t{}\nseed\t{}\n",
             to_string(q.geometry), q.alpha, q.stress, q.distortion, iterations, f.seed);
  return kOk;
}

// --- compare ---

struct CompareArgs {
  std::string input;
  std::size_t seeds = 10;
  std::uint64_t seed = 0;
  int iterations = 20;
  std::string schedule = "exponential";
  bool tsv = false;
};

void add_compare(CLI::App& app, CompareArgs& a) {
  auto* cmd = app.add_subcommand("compare", "Mean distortion of Euclidean, spherical and hyperbolic MDS");
  cmd->add_option("input", a.input, "Graph file")->required();
  cmd->add_option("--seeds", a.seeds, "Runs per geometry")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--seed", a.seed, "First seed")->envname("HYPERLAY_SEED")->capture_default_str();
  cmd->add_option("--iterations", a.iterations, "SGD iterations")->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd->add_option("--schedule", a.schedule, "Learning-rate schedule")
      ->check(CLI::IsMember({"exponential", "inverse-t", "inverse-sqrt-t"}))
      ->capture_default_str();
  cmd->add_flag("--tsv", a.tsv, "Tab-separated output");
}

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(a.input, err);
  SgdParams p;
  p.iterations = a.iterations;
  p.schedule = kSchedules.at(a.schedule);
  const auto seeds = seed_range(a.seeds, a.seed);
  const GeometryComparison c = compare_geometries(g, p, seeds);
  fmt::print(out, "{}", a.tsv ? comparison_tsv(c) : comparison_table(c));
  return kOk;
}

// --- gen ---

struct GenArgs {
  std::string kind;
  std::vector<std::size_t> params;
  std::uint64_t seed = 0;
  std::string out = "-";
};

void add_gen(CLI::App& app, GenArgs& a) {
  auto* cmd = app.add_subcommand("gen", "Generate a graph as an edge list");
  cmd->add_option("kind", a.kind, "Graph family")
      ->required()
      ->check(CLI::IsMember(
          {"path", "cycle", "grid", "triangular-lattice", "cube", "binary-tree", "random-tree", "random"}));
  cmd->add_option("params", a.params, "Family parameters (e.g. grid 8 8, random 100 300)");
  cmd->add_option("--seed", a.seed, "Random seed")->envname("HYPERLAY_SEED")->capture_default_str();
  cmd->add_option("--out,-o", a.out, "Output file ('-' for standard output)")->capture_default_str();
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Graph g;
  try {
    g = generate(a.kind, a.params, a.seed);
  } catch (const std::invalid_argument& e) {
    throw CommandError{kBadFlags, e.what()};
  }
  emit(a.out, write_edge_list(g), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph layout in hyperbolic, spherical and Euclidean geometry", "hyperlay"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hyperlay 0.1.0");

  LayoutArgs layout;
  RenderArgs render;
  MetricsArgs metrics;
  CompareArgs compare;
  GenArgs gen;
  add_layout(app, layout);
  add_render(app, render);
  add_metrics(app, metrics);
  add_compare(app, compare);
  add_gen(app, gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadFlags;
  }

  try {
    if (app.got_subcommand("layout")) return cmd_layout(layout, out, err);
    if (app.got_subcommand("render")) return cmd_render(render, out);
    if (app.got_subcommand("metrics")) return cmd_metrics(metrics, out);
    if (app.got_subcommand("compare")) return cmd_compare(compare, out, err);
    if (app.got_subcommand("gen")) return cmd_gen(gen, out);
  } catch (const CommandError& e) {
    fmt::print(err, "error: {}\n", e.message);
    return e.code;
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kParseError;
  } catch (const DisconnectedGraphError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kParseError;
  } catch (const LayoutFileError& e) {
    fmt::print(err, "error: invalid layout file: {}\n", e.what());
    return kParseError;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kFailure;
  }
  return kBadFlags;
}

}  // namespace hyperlay::cli
