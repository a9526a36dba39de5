#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlay/geometry.hpp"

namespace hyperlay {

using NodeId = std::uint32_t;

struct Node {
  NodeId id = 0;
  std::string label;
  std::optional<int> cluster;
  /// Precomputed Euclidean position (DOT `pos`), consumed by projection.
  std::optional<EuclideanPoint> position;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

/// A cluster region given as a closed polygon in the Euclidean input layout.
struct GraphPolygon {
  int cluster = 0;
  std::vector<EuclideanPoint> vertices;
  std::string color;
};

/// Thrown for graphs whose node set splits into several components.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(std::vector<NodeId> component, std::size_t component_count);

  /// Nodes of the first component not containing node 0.
  const std::vector<NodeId>& component() const { return component_; }
  std::size_t component_count() const { return component_count_; }

 private:
  std::vector<NodeId> component_;
  std::size_t component_count_;
};

/// Undirected simple graph with dense node ids 0..n-1.
///
/// Construction validates ids, rejects self-loops, duplicate edges and
/// non-positive weights (std::invalid_argument). Connectivity is not a
/// construction invariant; parse_graph and apsp enforce it.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Node> nodes, std::vector<Edge> edges, std::vector<GraphPolygon> polygons = {});

  /// Nodes labeled by their ids.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<GraphPolygon>& polygons() const { return polygons_; }

  /// Edge indices incident to node `v`.
  std::span<const std::uint32_t> incident(NodeId v) const;

  bool weighted() const;
  bool has_positions() const;

  /// Connected components, each sorted ascending; the one containing node 0
  /// comes first.
  std::vector<std::vector<NodeId>> components() const;
  bool connected() const;
  /// Throws DisconnectedGraphError if the graph is not connected.
  void require_connected() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<GraphPolygon> polygons_;
  std::vector<std::uint32_t> incidence_offsets_;
  std::vector<std::uint32_t> incidence_;
};

/// Dense symmetric matrix of graph-theoretic distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// `values` is row-major n x n. Throws std::invalid_argument if it is not
  /// symmetric with zero diagonal and finite positive off-diagonal entries.
  DistanceMatrix(std::size_t n, std::vector<double> values);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }

  /// Longest and shortest shortest path over pairs i < j (0 for n < 2).
  double max() const { return max_; }
  double min() const { return min_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  double max_ = 0.0;
  double min_ = 0.0;
};

/// All-pairs shortest paths: breadth-first search per source for unit
/// weights, Dijkstra otherwise. Throws DisconnectedGraphError.
DistanceMatrix apsp(const Graph& g);

// --- parsing -----------------------------------------------------------------

enum class GraphFormat { edge_list, dot };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  /// 1-based line number; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Parses an edge list ("u v [w]" per line, '#' comments) or the DOT subset
/// (undirected graph; node/edge statements; `label`, `pos`, `cluster`,
/// `weight` attributes; graph-level `polygons`). Unknown DOT attributes are
/// ignored with a warning.
///
/// Throws ParseError for syntax errors, self-loops, duplicate edges and bad
/// weights, DisconnectedGraphError for disconnected input.
ParsedGraph parse_graph(std::string_view text, GraphFormat format);

/// Guesses the format from a file name: .dot/.gv are DOT, all else edge list.
GraphFormat format_from_path(std::string_view path);

/// Reads from `path`, or standard input when `path` is "-".
ParsedGraph read_graph(const std::string& path, std::optional<GraphFormat> format = std::nullopt);

std::string write_edge_list(const Graph& g);

// --- generators --------------------------------------------------------------
//
// All generators return connected graphs and throw std::invalid_argument for
// unsatisfiable parameters.

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// w x h four-neighbour grid; node (x, y) has id y * w + x.
Graph grid_graph(std::size_t w, std::size_t h);
/// Triangle-shaped patch of the triangular lattice: row r holds r + 1 nodes,
/// each joined to its right neighbour and to the two nodes below it.
Graph triangular_lattice(std::size_t rows);
/// The 3-cube Q3.
Graph cube_graph();
/// Full binary tree with 2^(depth+1) - 1 nodes.
Graph binary_tree(std::size_t depth);
/// Random recursive tree: node i attaches to a uniform earlier node.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// m distinct uniform edges, resampled until connected (bounded retries).
Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

/// Dispatches on a kind name as used by the command line: path n, cycle n,
/// grid w h, triangular-lattice rows, cube, binary-tree depth,
/// random-tree n, random n m.
Graph generate(std::string_view kind, std::span<const std::size_t> params, std::uint64_t seed = 0);

}  // namespace hyperlay
