#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ktree/graph.hpp"
#include "ktree/parse_error.hpp"

namespace ktree {

struct LoadedGraph {
  Graph graph;
  /// original_ids[i] is the id vertex i carried in the file. Empty when the
  /// file ids were used directly.
  std::vector<std::uint64_t> original_ids;
  /// '#' lines other than the vertex-count directive, without the marker.
  std::vector<std::string> comments;
};

/// Reads "u v" / "u v w" lines. Reversed or repeated pairs collapse into one
/// edge and their weights add up. A "# n=<count>" comment fixes the vertex
/// count so isolated high-numbered vertices survive a round trip.
///
/// With `relabel`, ids are compacted to 0..n-1 in order of first appearance
/// and the mapping is returned in `original_ids`.
LoadedGraph read_edge_list(std::istream& in, bool relabel = false);
LoadedGraph read_edge_list(const std::string& path, bool relabel = false);

/// Writes the vertex-count directive, then `comments` as '#' lines, then one
/// line per edge (u < v), with the weight when the edge has one.
void write_edge_list(const Graph& g, std::ostream& out,
                     const std::vector<std::string>& comments = {});
void write_edge_list(const Graph& g, const std::string& path,
                     const std::vector<std::string>& comments = {});

/// CSV `vertex,original_id`.
void write_id_map(const std::vector<std::uint64_t>& original_ids, const std::string& path);

}  // namespace ktree
