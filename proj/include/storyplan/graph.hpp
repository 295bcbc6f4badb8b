#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace storyplan {

using Vertex = int;

/// Undirected edge, always normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Immutable after construction. Adjacency lists are sorted ascending and the
/// edge list is sorted lexicographically, so every iteration order derived
/// from a Graph is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws Error{OutOfRange|SelfLoop|DuplicateEdge}.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

bool is_triangle_free(const Graph& g);
bool is_forest(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Two-colouring with colour 0 on the smallest vertex of each component, or
/// an empty vector when g has an odd cycle.
std::vector<int> bipartition(const Graph& g);

/// True iff the subgraph induced by `vertices` has no cycle.
bool induces_forest(const Graph& g, std::span<const Vertex> vertices);

}  // namespace storyplan
