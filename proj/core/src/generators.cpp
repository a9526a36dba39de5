#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "hyperlay/graph.hpp"

namespace hyperlay {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

NodeId id(std::size_t i) { return static_cast<NodeId>(i); }

}  // namespace

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({id(i), id(i + 1)});
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({id(i), id((i + 1) % n)});
  return Graph::from_edges(n, std::move(edges));
}

Graph grid_graph(std::size_t w, std::size_t h) {
  require(w >= 1 && h >= 1, "grid needs positive width and height");
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t v = y * w + x;
      if (x + 1 < w) edges.push_back({id(v), id(v + 1)});
      if (y + 1 < h) edges.push_back({id(v), id(v + w)});
    }
  }
  return Graph::from_edges(w * h, std::move(edges));
}

Graph triangular_lattice(std::size_t rows) {
  require(rows >= 1, "triangular lattice needs rows >= 1");
  auto index = [](std::size_t r, std::size_t c) { return r * (r + 1) / 2 + c; };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      if (c < r) edges.push_back({id(index(r, c)), id(index(r, c + 1))});
      if (r + 1 < rows) {
        edges.push_back({id(index(r, c)), id(index(r + 1, c))});
        edges.push_back({id(index(r, c)), id(index(r + 1, c + 1))});
      }
    }
  }
  return Graph::from_edges(rows * (rows + 1) / 2, std::move(edges));
}

Graph cube_graph() {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < 8; ++v)
    for (NodeId bit = 1; bit < 8; bit <<= 1)
      if (!(v & bit)) edges.push_back({v, v | bit});
  return Graph::from_edges(8, std::move(edges));
}

Graph binary_tree(std::size_t depth) {
  require(depth < 24, "binary tree depth too large");
  const std::size_t n = (std::size_t{2} << depth) - 1;
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({id((v - 1) / 2), id(v)});
  return Graph::from_edges(n, std::move(edges));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "random tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    edges.push_back({id(pick(rng)), id(v)});
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(n >= 2, "random graph needs n >= 2");
  require(m + 1 >= n, "random graph needs m >= n - 1 to be connected");
  require(m <= n * (n - 1) / 2, "random graph has more edges than node pairs");
  constexpr int kMaxAttempts = 1000;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::set<std::pair<NodeId, NodeId>> chosen;
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
      NodeId a = id(pick(rng)), b = id(pick(rng));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (chosen.emplace(a, b).second) edges.push_back({a, b});
    }
    Graph g = Graph::from_edges(n, std::move(edges));
    if (g.connected()) return g;
  }
  throw std::runtime_error(fmt::format("no connected random graph with n={} m={} after {} attempts", n, m, kMaxAttempts));
}

Graph generate(std::string_view kind, std::span<const std::size_t> params, std::uint64_t seed) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(fmt::format("generator '{}' takes {} parameter{}", kind, k, k == 1 ? "" : "s"));
  };
  if (kind == "path") return arity(1), path_graph(params[0]);
  if (kind == "cycle") return arity(1), cycle_graph(params[0]);
  if (kind == "grid") return arity(2), grid_graph(params[0], params[1]);
  if (kind == "triangular-lattice") return arity(1), triangular_lattice(params[0]);
  if (kind == "cube") return arity(0), cube_graph();
  if (kind == "binary-tree") return arity(1), binary_tree(params[0]);
  if (kind == "random-tree") return arity(1), random_tree(params[0], seed);
  if (kind == "random") return arity(2), random_graph(params[0], params[1], seed);
  throw std::invalid_argument(fmt::format("unknown generator '{}'", kind));
}

}  // namespace hyperlay
