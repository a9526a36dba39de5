#include "hyperlay/layout_file.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace hyperlay {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw LayoutFileError(msg); }

json coords_json(const Coordinates& c) {
  json arr = json::array();
  std::visit(
      [&](const auto& pts) {
        using Point = typename std::decay_t<decltype(pts)>::value_type;
        for (const auto& p : pts) {
          if constexpr (std::is_same_v<Point, EuclideanPoint>)
            arr.push_back({p.x, p.y});
          else if constexpr (std::is_same_v<Point, LobachevskyPoint>)
            arr.push_back({p.u, p.v});
          else
            arr.push_back({p.x(), p.y(), p.z()});
        }
      },
      c);
  return arr;
}

json polygons_json(const std::vector<LayoutPolygon>& polys) {
  json arr = json::array();
  for (const auto& p : polys) arr.push_back({{"cluster", p.cluster}, {"color", p.color}, {"vertices", coords_json(p.vertices)}});
  return arr;
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) fail(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(what + " must be finite");
  return v;
}

Coordinates parse_coords(const json& j, Geometry geo, const std::string& what) {
  if (!j.is_array()) fail(what + " must be an array");
  const std::size_t arity = geo == Geometry::spherical ? 3 : 2;
  auto tuple = [&](const json& e, std::size_t k) {
    if (!e.is_array() || e.size() != arity)
      fail(fmt::format("{}[{}] must have {} components for {} geometry", what, k, arity, to_string(geo)));
  };
  switch (geo) {
    case Geometry::euclidean: {
      std::vector<EuclideanPoint> pts;
      for (std::size_t k = 0; k < j.size(); ++k) {
        tuple(j[k], k);
        pts.push_back({number(j[k][0], what), number(j[k][1], what)});
      }
      return pts;
    }
    case Geometry::hyperbolic: {
      std::vector<LobachevskyPoint> pts;
      for (std::size_t k = 0; k < j.size(); ++k) {
        tuple(j[k], k);
        pts.push_back({number(j[k][0], what), number(j[k][1], what)});
      }
      return pts;
    }
    case Geometry::spherical: {
      std::vector<SpherePoint> pts;
      for (std::size_t k = 0; k < j.size(); ++k) {
        tuple(j[k], k);
        const Vec3 v{number(j[k][0], what), number(j[k][1], what), number(j[k][2], what)};
        if (std::abs(norm(v) - 1.0) > 1e-9) fail(fmt::format("{}[{}] is not a unit vector", what, k));
        pts.emplace_back(v);
      }
      return pts;
    }
  }
  fail("unknown geometry");
}

std::vector<LayoutPolygon> parse_polygons(const json& j, Geometry geo) {
  if (!j.is_array()) fail("polygons must be an array");
  std::vector<LayoutPolygon> out;
  for (const auto& p : j) {
    if (!p.is_object() || !p.contains("vertices")) fail("polygon entries need vertices");
    LayoutPolygon poly;
    if (p.contains("cluster")) {
      if (!p["cluster"].is_number_integer()) fail("polygon cluster must be an integer");
      poly.cluster = p["cluster"].get<int>();
    }
    if (p.contains("color")) {
      if (!p["color"].is_string()) fail("polygon color must be a string");
      poly.color = p["color"].get<std::string>();
    }
    poly.vertices = parse_coords(p["vertices"], geo, "polygon vertices");
    out.push_back(std::move(poly));
  }
  return out;
}

Graph parse_graph_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges")) fail("graph needs nodes and edges");
  const json& jn = j["nodes"];
  const json& je = j["edges"];
  if (!jn.is_array() || !je.is_array()) fail("graph nodes and edges must be arrays");
  std::vector<Node> nodes;
  for (const auto& n : jn) {
    if (!n.is_object() || !n.contains("id") || !n["id"].is_number_unsigned()) fail("node entries need an id");
    Node node;
    node.id = n["id"].get<NodeId>();
    node.label = n.contains("label") && n["label"].is_string() ? n["label"].get<std::string>() : std::to_string(node.id);
    if (n.contains("cluster")) {
      if (!n["cluster"].is_number_integer()) fail("node cluster must be an integer");
      node.cluster = n["cluster"].get<int>();
    }
    nodes.push_back(std::move(node));
  }
  std::vector<Edge> edges;
  for (const auto& e : je) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      fail("edges must be [u, v] or [u, v, w]");
    Edge edge{e[0].get<NodeId>(), e[1].get<NodeId>(), 1.0};
    if (edge.u >= nodes.size() || edge.v >= nodes.size()) fail("edge endpoint out of range");
    if (e.size() == 3) edge.weight = number(e[2], "edge weight");
    edges.push_back(edge);
  }
  try {
    return Graph(std::move(nodes), std::move(edges));
  } catch (const std::invalid_argument& ex) {
    fail(std::string("invalid graph: ") + ex.what());
  }
}

}  // namespace

std::string to_json(const LayoutFile& f) {
  if (f.layout.size() != f.graph.size()) throw std::invalid_argument("layout and graph sizes differ");
  json nodes = json::array();
  for (const auto& n : f.graph.nodes()) {
    json jn = {{"id", n.id}, {"label", n.label}};
    if (n.cluster) jn["cluster"] = *n.cluster;
    nodes.push_back(std::move(jn));
  }
  json edges = json::array();
  for (const auto& e : f.graph.edges()) {
    json je = {e.u, e.v};
    if (e.weight != 1.0) je.push_back(e.weight);
    edges.push_back(std::move(je));
  }

  json doc;
  doc["version"] = kLayoutFileVersion;
  doc["graph"] = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  doc["geometry"] = std::string(to_string(f.layout.geometry()));
  doc["method"] = f.layout.method;
  doc["alpha"] = f.layout.alpha;
  doc["seed"] = f.seed;
  doc["coords"] = coords_json(f.layout.coords);
  if (!f.layout.polygons.empty()) doc["polygons"] = polygons_json(f.layout.polygons);
  if (!f.trace.empty()) {
    json tr = json::array();
    for (const auto& t : f.trace) tr.push_back({t.iteration, t.stress, t.max_displacement});
    doc["trace"] = std::move(tr);
  }
  if (f.euclidean_source) {
    if (f.euclidean_source->geometry() != Geometry::euclidean) throw std::invalid_argument("euclidean_source must be Euclidean");
    json src = {{"coords", coords_json(f.euclidean_source->coords)}};
    if (!f.euclidean_source->polygons.empty()) src["polygons"] = polygons_json(f.euclidean_source->polygons);
    doc["euclidean_source"] = std::move(src);
  }
  return doc.dump() + "\n";
}

LayoutFile parse_layout_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("layout file must be a JSON object");
  if (!doc.contains("version")) fail("missing version");
  if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kLayoutFileVersion)
    fail(fmt::format("unsupported version (expected {})", kLayoutFileVersion));
  for (const char* key : {"graph", "geometry", "coords"})
    if (!doc.contains(key)) fail(fmt::format("missing {}", key));

  LayoutFile f;
  f.graph = parse_graph_json(doc["graph"]);
  if (!doc["geometry"].is_string()) fail("geometry must be a string");
  Geometry geo;
  try {
    geo = geometry_from_string(doc["geometry"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  f.layout.coords = parse_coords(doc["coords"], geo, "coords");
  if (f.layout.size() != f.graph.size())
    fail(fmt::format("coords has {} entries for {} nodes", f.layout.size(), f.graph.size()));
  if (doc.contains("method")) {
    if (!doc["method"].is_string()) fail("method must be a string");
    f.layout.method = doc["method"].get<std::string>();
  }
  if (doc.contains("alpha")) {
    f.layout.alpha = number(doc["alpha"], "alpha");
    if (!(f.layout.alpha > 0.0)) fail("alpha must be positive");
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("seed must be a nonnegative integer");
    f.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("polygons")) f.layout.polygons = parse_polygons(doc["polygons"], geo);
  if (doc.contains("trace")) {
    const json& tr = doc["trace"];
    if (!tr.is_array()) fail("trace must be an array");
    for (const auto& t : tr) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer()) fail("trace rows must be [t, stress, max_disp]");
      f.trace.push_back({t[0].get<int>(), number(t[1], "trace stress"), number(t[2], "trace displacement")});
    }
  }
  if (doc.contains("euclidean_source")) {
    const json& src = doc["euclidean_source"];
    if (!src.is_object() || !src.contains("coords")) fail("euclidean_source needs coords");
    Layout e;
    e.coords = parse_coords(src["coords"], Geometry::euclidean, "euclidean_source coords");
    if (e.size() != f.graph.size()) fail("euclidean_source coords length differs from node count");
    e.method = "input";
    if (src.contains("polygons")) e.polygons = parse_polygons(src["polygons"], Geometry::euclidean);
    f.euclidean_source = std::move(e);
  }
  return f;
}

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LayoutFile read_layout_file(const std::string& path) { return parse_layout_file(read_file(path)); }

void write_layout_file(const LayoutFile& f, const std::string& path) { write_file_atomic(path, to_json(f)); }

void write_file_atomic(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  std::random_device rd;
  const fs::path tmp = target.parent_path() / fmt::format(".{}.{:08x}.tmp", target.filename().string(), rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot replace " + path);
  }
}

}  // namespace hyperlay
