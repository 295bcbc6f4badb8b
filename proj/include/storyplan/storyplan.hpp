#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "storyplan/geometry.hpp"
#include "storyplan/graph.hpp"

namespace storyplan {

/// Steps are 1-based: tau(v) in [1, n]. An order lists the vertex of each
/// step, so order[i - 1] appears at step i.
using Order = std::vector<Vertex>;

struct Lifespan {
  int appear = 0;
  int disappear_after = 0;
  friend bool operator==(const Lifespan&, const Lifespan&) = default;
};

/// tau as a vertex-indexed vector of steps. Throws Error{NotBijective}.
std::vector<int> step_of(int n, std::span<const Vertex> order);

/// i_v = tau(v), j_v = max tau over the closed neighbourhood.
std::vector<Lifespan> lifespans(const Graph& g, std::span<const Vertex> order);

struct Frame {
  int step = 0;
  std::vector<Vertex> visible;  // sorted
  Vertex new_vertex = -1;
  /// V(G_i) n V(G_{i+1}); absent for the last step.
  std::optional<std::vector<Vertex>> prime;
};

std::vector<Frame> frames(const Graph& g, std::span<const Vertex> order);

/// A frame graph with its vertices relabelled 0..k-1 in `vertices` order.
struct FrameGraph {
  std::vector<Vertex> vertices;
  Graph graph;
};

/// (G_i, G_i') for every step; G_n' is absent.
std::vector<std::pair<FrameGraph, std::optional<FrameGraph>>> frame_graphs(const Graph& g,
                                                                          std::span<const Vertex> order);

enum class Mode { Planar, Outerplanar, Forest };

std::string to_string(Mode m);
/// Throws Error{ParseError}.
Mode parse_mode(const std::string& s);

struct Storyplan {
  Order order;
  PositionMap positions;
  friend bool operator==(const Storyplan&, const Storyplan&) = default;
};

struct FrameReport {
  int step = 0;
  bool class_ok = true;
  bool plane_ok = true;
  std::size_t edges = 0;
};

struct VerifyReport {
  bool ok = true;
  std::vector<FrameReport> per_frame;
  std::optional<std::string> first_violation;
  std::size_t max_edges = 0;
};

/// Full check of a straight-line storyplan: bijective order, positions for
/// every vertex, each D_i and D_i' plane, the mode's class condition on
/// every D_i, and edge coverage. Never throws; problems go in the report.
VerifyReport verify_storyplan(const Graph& g, const Storyplan& plan, Mode mode);

}  // namespace storyplan
