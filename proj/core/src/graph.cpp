#include "hyperlay/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include <fmt/format.h>

#include "parsers.hpp"

namespace hyperlay {

namespace {

std::string describe_component(const std::vector<NodeId>& nodes, std::size_t count) {
  std::string list;
  const std::size_t shown = std::min<std::size_t>(nodes.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) list += fmt::format("{}{}", i ? ", " : "", nodes[i]);
  if (nodes.size() > shown) list += fmt::format(", ... ({} nodes)", nodes.size());
  return fmt::format("graph is disconnected ({} components); unreachable from node 0: {{{}}}", count, list);
}

std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

DisconnectedGraphError::DisconnectedGraphError(std::vector<NodeId> component, std::size_t component_count)
    : std::runtime_error(describe_component(component, component_count)),
      component_(std::move(component)),
      component_count_(component_count) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? fmt::format("line {}: {}", line, message) : message), line_(line) {}

Graph::Graph(std::vector<Node> nodes, std::vector<Edge> edges, std::vector<GraphPolygon> polygons)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), polygons_(std::move(polygons)) {
  const std::size_t n = nodes_.size();
  if (n > std::numeric_limits<NodeId>::max()) throw std::invalid_argument("too many nodes");
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes_[i].id != i) throw std::invalid_argument(fmt::format("node ids must be dense 0..n-1 (found {} at {})", nodes_[i].id, i));
  }

  std::set<std::uint64_t> seen;
  std::vector<std::uint32_t> degree(n, 0);
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument(fmt::format("edge {}-{} references a missing node", e.u, e.v));
    if (e.u == e.v) throw std::invalid_argument(fmt::format("self-loop at node {}", e.u));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument(fmt::format("edge {}-{} has non-positive weight", e.u, e.v));
    }
    if (!seen.insert(edge_key(e.u, e.v)).second) throw std::invalid_argument(fmt::format("duplicate edge {}-{}", e.u, e.v));
    ++degree[e.u];
    ++degree[e.v];
  }

  incidence_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) incidence_offsets_[i + 1] = incidence_offsets_[i] + degree[i];
  incidence_.resize(incidence_offsets_[n]);
  std::vector<std::uint32_t> fill(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
  for (std::uint32_t k = 0; k < edges_.size(); ++k) {
    incidence_[fill[edges_[k].u]++] = k;
    incidence_[fill[edges_[k].v]++] = k;
  }
}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  std::vector<Node> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].id = static_cast<NodeId>(i);
    nodes[i].label = std::to_string(i);
  }
  return Graph(std::move(nodes), std::move(edges));
}

std::span<const std::uint32_t> Graph::incident(NodeId v) const {
  return {incidence_.data() + incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]};
}

bool Graph::weighted() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight != 1.0; });
}

bool Graph::has_positions() const {
  return !nodes_.empty() && std::all_of(nodes_.begin(), nodes_.end(), [](const Node& v) { return v.position.has_value(); });
}

std::vector<std::vector<NodeId>> Graph::components() const {
  const std::size_t n = size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    label[s] = c;
    stack.assign(1, s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      out[c].push_back(v);
      for (std::uint32_t k : incident(v)) {
        const Edge& e = edges_[k];
        const NodeId w = e.u == v ? e.v : e.u;
        if (label[w] < 0) {
          label[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

bool Graph::connected() const { return components().size() <= 1; }

void Graph::require_connected() const {
  auto parts = components();
  if (parts.size() > 1) throw DisconnectedGraphError(std::move(parts[1]), parts.size());
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != n * n) throw std::invalid_argument("distance matrix has the wrong size");
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (values_[i * n + i] != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = values_[i * n + j];
      if (d != values_[j * n + i]) throw std::invalid_argument("distance matrix must be symmetric");
      if (!(d > 0.0) || !std::isfinite(d)) throw std::invalid_argument("off-diagonal distances must be finite and positive");
      if (first) {
        max_ = min_ = d;
        first = false;
      } else {
        max_ = std::max(max_, d);
        min_ = std::min(min_, d);
      }
    }
  }
}

DistanceMatrix apsp(const Graph& g) {
  g.require_connected();
  const std::size_t n = g.size();
  std::vector<double> d(n * n, std::numeric_limits<double>::infinity());
  const auto& edges = g.edges();

  if (!g.weighted()) {
    std::vector<NodeId> queue(n);
    for (NodeId s = 0; s < n; ++s) {
      double* row = d.data() + static_cast<std::size_t>(s) * n;
      row[s] = 0.0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const NodeId v = queue[head++];
        for (std::uint32_t k : g.incident(v)) {
          const NodeId w = edges[k].u == v ? edges[k].v : edges[k].u;
          if (std::isinf(row[w])) {
            row[w] = row[v] + 1.0;
            queue[tail++] = w;
          }
        }
      }
    }
  } else {
    using Item = std::pair<double, NodeId>;
    for (NodeId s = 0; s < n; ++s) {
      double* row = d.data() + static_cast<std::size_t>(s) * n;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      row[s] = 0.0;
      heap.emplace(0.0, s);
      while (!heap.empty()) {
        const auto [dist, v] = heap.top();
        heap.pop();
        if (dist > row[v]) continue;
        for (std::uint32_t k : g.incident(v)) {
          const NodeId w = edges[k].u == v ? edges[k].v : edges[k].u;
          const double cand = dist + edges[k].weight;
          if (cand < row[w]) {
            row[w] = cand;
            heap.emplace(cand, w);
          }
        }
      }
    }
    // Dijkstra sums in different orders from each end; keep the matrix exactly
    // symmetric.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d[j * n + i] = d[i * n + j] = std::min(d[i * n + j], d[j * n + i]);
  }
  return DistanceMatrix(n, std::move(d));
}

// --- edge lists --------------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

ParsedGraph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::set<std::uint64_t> seen;
  std::size_t n = 0;
  std::size_t line_no = 0;
  bool any = false;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() > 3) throw ParseError(line_no, "expected \"u v [w]\"");

    std::uint32_t u = 0, v = 0;
    if (!parse_number(tok[0], u)) throw ParseError(line_no, fmt::format("bad node id '{}'", tok[0]));
    any = true;
    n = std::max<std::size_t>(n, u + 1);
    if (tok.size() == 1) continue;  // isolated node declaration
    if (!parse_number(tok[1], v)) throw ParseError(line_no, fmt::format("bad node id '{}'", tok[1]));
    double w = 1.0;
    if (tok.size() == 3 && (!parse_number(tok[2], w) || !(w > 0.0) || !std::isfinite(w))) {
      throw ParseError(line_no, fmt::format("bad weight '{}'", tok[2]));
    }
    if (u == v) throw ParseError(line_no, fmt::format("self-loop at node {}", u));
    if (!seen.insert(edge_key(u, v)).second) throw ParseError(line_no, fmt::format("duplicate edge {}-{}", u, v));
    n = std::max<std::size_t>(n, v + 1);
    edges.push_back({u, v, w});
  }
  if (!any) throw ParseError(0, "graph has no nodes");

  ParsedGraph out{Graph::from_edges(n, std::move(edges)), {}};
  out.graph.require_connected();
  return out;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dot ? detail::parse_dot(text) : parse_edge_list(text);
}

GraphFormat format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return GraphFormat::edge_list;
  std::string ext(path.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == "dot" || ext == "gv" ? GraphFormat::dot : GraphFormat::edge_list;
}

ParsedGraph read_graph(const std::string& path, std::optional<GraphFormat> format) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_graph(text, format.value_or(format_from_path(path)));
}

std::string write_edge_list(const Graph& g) {
  std::string out = fmt::format("# {} nodes, {} edges\n", g.size(), g.edge_count());
  if (g.size() == 1) out += "0\n";
  for (const Edge& e : g.edges()) {
    if (e.weight == 1.0)
      out += fmt::format("{} {}\n", e.u, e.v);
    else
      out += fmt::format("{} {} {}\n", e.u, e.v, e.weight);
  }
  return out;
}

}  // namespace hyperlay
