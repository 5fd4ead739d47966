#pragma once

#include "zhat/exact_matrix.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zhat {

/// Weighted tree. Vertices are 0-based in memory and 1-based in PLUMB v1 files.
class PlumbingGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  PlumbingGraph() = default;
  /// Throws NotATree for a cycle, a disconnected graph, self-loops or repeated edges, and
  /// FormatError for an out-of-range endpoint.
  PlumbingGraph(std::vector<std::int64_t> weights, std::vector<Edge> edges);

  std::size_t vertexCount() const { return weights_.size(); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t degree(std::size_t v) const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  std::vector<std::int64_t> weights_;
  std::vector<Edge> edges_;
};

/// PLUMB v1: vertex count, then the weights, then one "i j" line per edge (1-based).
/// Lines starting with '#' and blank lines are skipped.
PlumbingGraph parsePlumbing(std::string_view text);
std::string formatPlumbing(const PlumbingGraph& g);

ExactMatrix linkingMatrix(const PlumbingGraph& g);
std::vector<int> degreeVector(const PlumbingGraph& g);

struct VertexDeletion {
  PlumbingGraph graph;
  /// oldToNew[v] is the new index of old vertex v; the deleted vertex maps to npos.
  std::vector<std::size_t> oldToNew;
};

/// Removes leaf v, keeping the relative order of the remaining vertices. Throws NotALeaf.
VertexDeletion deleteVertex(const PlumbingGraph& g, std::size_t v);

}  // namespace zhat
