#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "storyplan/embedding.hpp"
#include "storyplan/graph.hpp"
#include "storyplan/storyplan.hpp"

namespace storyplan {

/// One side in ascending order, then the other; every frame is a star
/// forest. Throws Error{NotBipartite}.
Storyplan plan_bipartite_forest(const Graph& g);

/// Tree over the stacked vertices: v_i (i >= 4, stacked on v_k v_l with
/// k < l in the stacking order) is a child of v_l, or of the root triangle
/// when l <= 3. Children are kept in stacking order.
struct TwoTreeDecomposition {
  std::array<Vertex, 3> root{};
  std::vector<Vertex> root_children;
  std::vector<std::vector<Vertex>> children;  // per vertex
  std::vector<Vertex> parent;                 // -1 for the root and its children
  std::vector<Edge> stacked_on;               // per vertex; unused for the root
};

TwoTreeDecomposition two_tree_decomposition(int n, const StackingOrder& sigma);

/// Root triangle followed by the depth-first pre-order of the tree.
Order two_tree_order(const TwoTreeDecomposition& t);

/// Throws Error{Not2Tree}.
Storyplan plan_two_tree_outerplanar(const Graph& g);
/// Uses the given stacking order, which must rebuild g.
Storyplan plan_two_tree_outerplanar(const Graph& g, const StackingOrder& sigma);

/// A 2-tree containing g (n >= 3), found by eliminating vertices of degree
/// at most 2 with fill edges. Throws Error{Not2Tree} if g has treewidth > 2.
Graph complete_to_two_tree(const Graph& g);

/// Plans the 2-tree completion and keeps its order and positions; frames of
/// g are sub-drawings of the completion's frames.
Storyplan plan_partial_two_tree_outerplanar(const Graph& g);

/// Visible, not yet completed vertices keyed by (degree in the prefix graph
/// H, degree in the reduced frame G').
class DegreeBuckets {
 public:
  void set(Vertex v, int deg_h, int deg_g);
  void erase(Vertex v);
  bool contains(Vertex v) const { return key_.contains(v); }
  std::pair<int, int> key(Vertex v) const { return key_.at(v); }
  std::size_t size() const { return key_.size(); }
  /// Maximum key, smallest vertex among ties.
  std::optional<Vertex> best() const;

 private:
  std::map<std::pair<int, int>, std::set<Vertex>> buckets_;
  std::map<Vertex, std::pair<int, int>> key_;
};

/// Throws Error{DegreeTooHigh} or Error{IsK4} (a K4 component).
Storyplan plan_subcubic_outerplanar(const Graph& g);

/// Throws Error{DegreeTooHigh} or Error{HasTriangle}.
Storyplan plan_subcubic_forest(const Graph& g);

/// Order along the outer face of an outerplanar embedding, vertices in
/// convex position. Throws Error{NotOuterplanar} or Error{HasTriangle}.
Storyplan plan_outerplanar_forest(const Graph& g);

/// Planar storyplan of any planar graph: one straight-line drawing of the
/// whole graph, vertices in index order. Throws Error{NotPlanar}.
Storyplan plan_fixed_drawing(const Graph& g);

}  // namespace storyplan
