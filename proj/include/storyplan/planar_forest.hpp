#pragma once

#include <optional>
#include <vector>

#include "storyplan/embedding.hpp"
#include "storyplan/geometry.hpp"
#include "storyplan/graph.hpp"
#include "storyplan/storyplan.hpp"

namespace storyplan {

/// Outer-middle-outer path a - middle - b through an inner vertex.
struct HalfChord {
  Vertex a = -1;
  Vertex middle = -1;
  Vertex b = -1;
  friend bool operator==(const HalfChord&, const HalfChord&) = default;
};

/// Outer structure of the current embedded graph G_i and its subgraph G_i'.
struct BoundaryStructure {
  std::vector<char> outer;                        // per vertex: alive and on the outer face
  std::vector<std::vector<Vertex>> outer_cycles;  // simple cycles bounding the outer face, sorted
  std::vector<Edge> cycle_edges;                  // sorted
  std::vector<Edge> outer_edges;                  // every edge on the outer face, sorted
  std::vector<Edge> connectors;
  std::vector<Edge> chords;
  std::vector<HalfChord> half_chords;
  std::vector<Vertex> free_vertices;
  std::vector<Edge> prime_edges;  // E(G_i'), sorted
  std::vector<Vertex> prime_vertices;

  bool is_outer_edge(Edge e) const;
  bool is_cycle_edge(Edge e) const;
};

/// Weak dual of G_i': one node per inner face, one edge per G_i' edge with
/// inner faces on both sides.
struct WeakDual {
  std::vector<std::vector<Dart>> faces;
  std::vector<std::pair<int, int>> edges;
  std::vector<Edge> primal;  // the G_i' edge crossed by each dual edge
  std::vector<int> component;
  int component_count = 0;

  int node_count() const { return static_cast<int>(faces.size()); }
  int degree(int f) const;
  /// Face on the left of the dart, or -1 for the outer face.
  int face_of(Dart d) const;

  std::vector<std::pair<Dart, int>> dart_face;  // sorted by dart
};

struct PlanarForestStats {
  int iterations = 0;
  int constructive_picks = 0;
  int fallback_picks = 0;
  int tail_vertices = 0;
};

/// The iterative picker. Positions are fixed up front; the current graph
/// G_i is g minus the vertices removed so far, embedded by the positions.
class PlanarForestPlanner {
 public:
  /// Throws Error{NotPlanar}, Error{HasTriangle}, or Error{MissingPosition}
  /// if given positions do not draw g plane.
  PlanarForestPlanner(const Graph& g, std::optional<PositionMap> positions = std::nullopt);

  const Graph& graph() const { return g_; }
  const PositionMap& positions() const { return positions_; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  bool appeared(Vertex v) const { return appeared_[v] != 0; }
  /// Appeared and not yet removed.
  bool visible(Vertex v) const { return alive_[v] && appeared_[v]; }
  const Order& order() const { return order_; }
  const PlanarForestStats& stats() const { return stats_; }

  /// Appends v to the order without any checks, so that the rules can be
  /// inspected on a prepared state.
  void mark_visible(Vertex v);

  /// G_i restricted to alive vertices is a forest.
  bool current_is_forest() const;

  BoundaryStructure boundary() const;
  /// Throws Error{CactusViolation} for loops or non-cactus duals.
  WeakDual weak_dual(const BoundaryStructure& bs) const;
  /// Faces with exactly one half-chord and no other inner edge; checks
  /// both claims about F where they apply (Error{ClaimViolation}).
  std::vector<int> faces_F(const BoundaryStructure& bs, const WeakDual& dual) const;

  bool is_good(Vertex v, const BoundaryStructure& bs) const;
  /// Throws Error{NoGoodVertex}.
  Vertex find_good_vertex();

  /// Emits v and its invisible neighbours (ascending), checking the frame
  /// invariants after every step, then removes completed vertices and checks
  /// that every visible vertex is outer.
  /// Throws Error{InvariantViolation}.
  void pick(Vertex v);

  /// Runs to completion and returns the plan.
  Storyplan run();

 private:
  std::vector<Vertex> constructive_candidates(const BoundaryStructure& bs, const WeakDual& dual,
                                              const std::vector<int>& F) const;
  void emit(Vertex x, Vertex picked, const BoundaryStructure& bs);
  void finish_with_forest();

  Graph g_;
  PositionMap positions_;
  std::vector<char> alive_, appeared_, completed_;
  std::vector<int> unappeared_nbrs_;
  Order order_;
  PlanarForestStats stats_;
};

/// Forest storyplan of a triangle-free planar graph; positions are given or
/// drawn with straight_line_draw_planar.
Storyplan plan_planar_forest(const Graph& g, std::optional<PositionMap> positions = std::nullopt,
                             PlanarForestStats* stats = nullptr);

}  // namespace storyplan
