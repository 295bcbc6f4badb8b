#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "storyplan/graph.hpp"
#include "storyplan/storyplan.hpp"

namespace storyplan {

struct DecideOptions {
  int max_n = 12;
  bool symmetry = true;
  std::uint64_t node_budget = 1'000'000'000;
  int jobs = 1;
};

/// Outcome of the combinatorial search: does some order put every frame
/// graph in the class? Geometry is not considered.
struct Verdict {
  bool feasible = false;
  bool budget_exhausted = false;  // when set, `feasible` is meaningless
  std::optional<Order> witness;
  std::uint64_t nodes_explored = 0;
};

/// Class membership of a whole graph: planar, outerplanar, or acyclic.
bool graph_in_class(const Graph& g, Mode cls);

/// Every frame graph G_i of the order lies in the class.
bool frames_in_class(const Graph& g, const Order& order, Mode cls);

/// Throws Error{TooLarge} if n > opts.max_n (or n > 64).
Verdict decide_storyplan(const Graph& g, Mode cls, const DecideOptions& opts = {});

/// Calls `visit` on every order whose frames all lie in the class, in
/// lexicographic order. Returns the number of orders visited.
std::uint64_t for_each_feasible_order(const Graph& g, Mode cls, const std::function<void(const Order&)>& visit);

/// Orbits of the automorphism group, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& g);

struct SideVisibility {
  std::vector<Vertex> side_a, side_b;  // side_a holds the smaller part (ties: the part with vertex 0)
  bool a_fully_visible = false;
  bool b_fully_visible = false;
  std::optional<int> a_step, b_step;  // first step at which the side is fully visible
};

/// For a complete bipartite graph and an order with planar frames, reports
/// which sides are simultaneously visible at some step.
/// Throws Error{NotBipartite} for other graphs, Error{FramesNotPlanar} if a
/// frame is not planar.
SideVisibility check_bipartite_visibility(const Graph& g, const Order& order);

}  // namespace storyplan
