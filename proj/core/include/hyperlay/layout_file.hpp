#pragma once

// JSON interchange format shared by the command line tool and the viewer.
//
//   {
//     "version": 1,
//     "graph": {"nodes": [{"id": 0, "label": "a", "cluster": 2}, ...],
//               "edges": [[0, 1], [1, 2, 0.5], ...]},
//     "geometry": "hyperbolic" | "spherical" | "euclidean",
//     "method": "hmds" | "force" | "project" | ...,
//     "alpha": 0.5,
//     "seed": 1,
//     "coords": [[u, v], ...]           hyperbolic: Lobachevsky (u, v)
//               [[x, y, z], ...]        spherical: unit vectors
//               [[x, y], ...]           euclidean
//     "polygons": [{"cluster": 0, "color": "#aabbcc", "vertices": [[..], ..]}],
//     "trace": [[t, stress, max_displacement], ...],
//     "euclidean_source": {"coords": [[x, y], ...], "polygons": [...]}
//   }
//
// "polygons", "trace" and "euclidean_source" are optional. Edge weights are
// written only when they differ from 1. Doubles are written in the shortest
// form that reads back to the same value.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlay/graph.hpp"
#include "hyperlay/hmds.hpp"
#include "hyperlay/layout.hpp"

namespace hyperlay {

inline constexpr int kLayoutFileVersion = 1;

class LayoutFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LayoutFile {
  Graph graph;
  Layout layout;
  std::uint64_t seed = 0;
  std::vector<TraceEntry> trace;
  /// The Euclidean layout a projected layout was lifted from.
  std::optional<Layout> euclidean_source;
};

std::string to_json(const LayoutFile& f);
/// Throws LayoutFileError for malformed or inconsistent documents.
LayoutFile parse_layout_file(std::string_view text);

/// `path` "-" means standard input.
LayoutFile read_layout_file(const std::string& path);
/// `path` "-" means standard output.
void write_layout_file(const LayoutFile& f, const std::string& path);

/// Writes via a temporary file in the same directory and a rename, so the
/// target is either untouched or complete. "-" writes to standard output.
void write_file_atomic(const std::string& path, std::string_view content);
/// Whole file, or standard input for "-". Throws std::runtime_error.
std::string read_file(const std::string& path);

}  // namespace hyperlay
