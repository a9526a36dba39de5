#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "hyperlay/layout_file.hpp"

namespace fs = std::filesystem;
using namespace hyperlay;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperlay");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
  const fs::path dir = HYPERLAY_TEST_TMPDIR;
  fs::create_directories(dir);
  return dir / name;
}

fs::path write(const std::string& name, const std::string& content) {
  const fs::path p = tmp(name);
  std::ofstream(p) << content;
  return p;
}

std::string slurp(const fs::path& p) { return read_file(p.string()); }

}  // namespace

TEST_CASE("gen writes edge lists") {
  const Outcome r = run({"gen", "cycle", "50"});
  CHECK(r.code == 0);
  const ParsedGraph g = parse_graph(r.out, GraphFormat::edge_list);
  CHECK(g.graph.size() == 50);
  CHECK(g.graph.edge_count() == 50);

  CHECK(run({"gen", "grid", "3"}).code == cli::kBadFlags);
  CHECK(run({"gen", "petersen"}).code == cli::kBadFlags);
  CHECK(run({"gen", "random", "20", "40", "--seed", "3"}).out == run({"gen", "random", "20", "40", "--seed", "3"}).out);
}

TEST_CASE("layout writes a layout file with a 20-iteration trace") {
  const fs::path in = write("tree.el", run({"gen", "binary-tree", "4"}).out);
  const fs::path out = tmp("tree.json");
  const Outcome r = run({"layout", in.string(), "--method", "hmds", "--geometry", "hyperbolic", "--seed", "1", "--out", out.string()});
  REQUIRE(r.code == 0);
  const LayoutFile f = read_layout_file(out.string());
  CHECK(f.layout.method == "hmds");
  CHECK(f.layout.geometry() == Geometry::hyperbolic);
  CHECK(f.trace.size() == 21);
  CHECK(f.seed == 1);
  CHECK(r.out.find("distortion\t") != std::string::npos);
  CHECK(r.out.find("iterations_run\t20") != std::string::npos);

  const fs::path again = tmp("tree2.json");
  run({"layout", in.string(), "--seed", "1", "--out", again.string()});
  CHECK(slurp(out) == slurp(again));
}

TEST_CASE("layout to standard output") {
  const fs::path in = write("p3.el", "0 1\n1 2\n");
  const Outcome r = run({"layout", in.string(), "--geometry", "spherical"});
  REQUIRE(r.code == 0);
  CHECK(parse_layout_file(r.out).layout.geometry() == Geometry::spherical);
  CHECK(r.err.find("stress\t") != std::string::npos);
}

TEST_CASE("exit codes") {
  const fs::path in = write("c5.el", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(run({"layout", in.string(), "--bogus"}).code == cli::kBadFlags);
  CHECK(run({"layout", in.string(), "--geometry", "flat"}).code == cli::kBadFlags);
  CHECK(run({"layout", in.string(), "--alpha", "1", "--alpha-search"}).code == cli::kBadFlags);
  CHECK(run({}).code == cli::kBadFlags);
  CHECK(run({"--help"}).code == 0);

  const fs::path bad = write("bad.el", "0 a b\n");
  const Outcome parse = run({"layout", bad.string()});
  CHECK(parse.code == cli::kParseError);
  CHECK(parse.err.find("line 1") != std::string::npos);
  CHECK(run({"layout", write("split.el", "0 1\n2 3\n").string()}).code == cli::kParseError);
  CHECK(run({"render", write("bad.json", "{\"version\": 1}").string()}).code == cli::kParseError);

  CHECK(run({"layout", in.string(), "--method", "project"}).code == cli::kIncompatible);
  CHECK(run({"layout", in.string(), "--method", "force", "--geometry", "spherical"}).code == cli::kIncompatible);
  CHECK(run({"layout", in.string(), "--alpha-search", "--geometry", "euclidean"}).code == cli::kIncompatible);
  CHECK(run({"layout", tmp("absent.el").string()}).code == cli::kFailure);
}

TEST_CASE("failed layout leaves no output file") {
  const fs::path out = tmp("never.json");
  fs::remove(out);
  run({"layout", write("bad2.el", "0 0\n").string(), "--out", out.string()});
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("project, render and metrics") {
  const fs::path dot = write("pos.dot", R"(graph {
  a [pos="0,0", cluster=0]; b [pos="1,0", cluster=0]; c [pos="0,1", cluster=1]; d [pos="-1,-1", cluster=1];
  a -- b; a -- c; a -- d; b -- c;
  graph [polygons="0:#ff8800:0,0 1,0 0.5,-0.5"];
})");
  const fs::path proj = tmp("proj.json");
  REQUIRE(run({"layout", dot.string(), "--method", "project", "--coverage", "0.5", "--out", proj.string()}).code == 0);
  const LayoutFile f = read_layout_file(proj.string());
  CHECK(f.layout.method == "project");
  CHECK(f.euclidean_source.has_value());
  CHECK(f.layout.polygons.size() == 1);

  const Outcome svg = run({"render", proj.string(), "--edge-opacity", "0.2"});
  REQUIRE(svg.code == 0);
  CHECK(svg.out.find("stroke-opacity=\"0.2\"") != std::string::npos);
  CHECK(svg.out.find("<text") != std::string::npos);
  CHECK(run({"render", proj.string(), "--label-size", "0"}).out.find("<text") == std::string::npos);
  CHECK(run({"render", proj.string(), "--zoom", "2"}).code == cli::kBadFlags);
  CHECK(svg.out == run({"render", proj.string(), "--edge-opacity", "0.2"}).out);

  // Re-laying out a layout file reuses its Euclidean source.
  const Outcome again = run({"layout", proj.string(), "--method", "project"});
  CHECK(again.code == 0);

  const fs::path force = tmp("force.json");
  REQUIRE(run({"layout", dot.string(), "--method", "force", "--seed", "2", "--out", force.string()}).code == 0);
  CHECK(read_layout_file(force.string()).layout.method == "force");

  const Outcome m = run({"metrics", proj.string()});
  CHECK(m.code == 0);
  CHECK(m.out.find("distortion\t") != std::string::npos);
}

TEST_CASE("metrics of a perfect layout") {
  LayoutFile f;
  f.graph = Graph::from_edges(2, {{0, 1, 1.0}});
  f.layout.coords = std::vector<LobachevskyPoint>{{0, 0}, {0.5, 0}};
  f.layout.alpha = 0.5;
  f.layout.method = "hmds";
  const fs::path p = write("perfect.json", to_json(f));
  const Outcome m = run({"metrics", p.string()});
  REQUIRE(m.code == 0);
  CHECK(m.out.find("stress\t0\n") != std::string::npos);
  CHECK(m.out.find("distortion\t0\n") != std::string::npos);
}

TEST_CASE("compare") {
  const fs::path in = write("tree5.el", run({"gen", "binary-tree", "4"}).out);
  const Outcome r = run({"compare", in.string(), "--seeds", "3", "--tsv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("euclidean\t") != std::string::npos);
  CHECK(r.out.find("spherical\t") != std::string::npos);
  CHECK(r.out.find("hyperbolic\t") != std::string::npos);
  const Outcome table = run({"compare", in.string(), "--seeds", "3"});
  CHECK(table.code == 0);
  CHECK(table.out.find("hyperbolic") != std::string::npos);
}
