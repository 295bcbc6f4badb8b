#pragma once

#include <optional>
#include <span>
#include <vector>

#include "storyplan/graph.hpp"

namespace storyplan {

/// Directed edge u -> v of an embedded graph.
struct Dart {
  Vertex from = -1;
  Vertex to = -1;
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Combinatorial embedding: a cyclic neighbour order per vertex plus one
/// dart per connected component (with edges) whose left face is that
/// component's outer face.
///
/// Faces are traced with the face on the left: from dart u->v the walk
/// continues with v->w where w precedes u in the rotation at v. With
/// counterclockwise rotations taken from a straight-line drawing, bounded
/// faces come out counterclockwise.
class RotationSystem {
 public:
  RotationSystem() = default;
  RotationSystem(std::vector<std::vector<Vertex>> rotation, std::vector<Dart> outer_darts);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<Dart>& outer_darts() const { return outer_darts_; }

  /// The dart following `d` on its face.
  Dart next_in_face(Dart d) const;

  /// All faces as closed dart walks; isolated vertices contribute no walk.
  std::vector<std::vector<Dart>> faces() const;

  /// Face walk starting at `d`.
  std::vector<Dart> face_of(Dart d) const;

  /// The designated outer face walk of each component, in outer_darts order.
  std::vector<std::vector<Dart>> outer_faces() const;

  /// Every edge appears exactly once in each endpoint's rotation and every
  /// connected component satisfies V - E + F = 2.
  bool is_consistent_with(const Graph& g) const;

 private:
  int position_of(Vertex v, Vertex neighbor) const;

  std::vector<std::vector<Vertex>> rotation_;
  std::vector<Dart> outer_darts_;
};

/// Boyer-Myrvold planarity test. Returns an embedding or nullopt.
std::optional<RotationSystem> planarity(const Graph& g);

/// Planarity verdict only; cheap edge-count shortcuts before the full test.
bool is_planar(const Graph& g);

/// True iff g plus one apex vertex adjacent to every vertex is planar.
bool is_outerplanar(const Graph& g);

/// Embedding of an outerplanar graph in which every vertex lies on the
/// designated outer face of its component, or nullopt if g is not
/// outerplanar.
std::optional<RotationSystem> outerplanar_embedding(const Graph& g);

/// 2-tree elimination result: order[0..2] is the base triangle and
/// stacked_on[i] (i >= 3) the edge that order[i] is stacked onto, with
/// both endpoints earlier in the order.
struct StackingOrder {
  std::vector<Vertex> order;
  std::vector<Edge> stacked_on;
};

/// Recognises 2-trees by repeatedly removing the smallest-index degree-2
/// vertex whose neighbours are adjacent. Throws Error{Not2Tree}.
StackingOrder stacking_order(const Graph& g);

/// Checks that `sigma` rebuilds exactly g's edge set by triangle + stacking.
bool replays_stacking_order(const Graph& g, const StackingOrder& sigma);

}  // namespace storyplan
