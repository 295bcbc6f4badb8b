#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "storyplan/graph.hpp"
#include "storyplan/storyplan.hpp"

namespace storyplan {

struct RenderConfig {
  int width = 480;
  int height = 480;
  int margin = 32;
  double vertex_radius = 7.0;
  double stroke_width = 2.0;
  bool show_labels = true;
  bool highlight_new = true;

  /// Throws Error{BadParams}.
  void validate() const;
};

/// SVG of the subgraph induced by `visible`. Coordinates are mapped by one
/// affine map fitted to all positions of the plan, so frames line up.
std::string render_frame_svg(const Graph& g, const Storyplan& plan, const std::vector<Vertex>& visible,
                             Vertex highlight, const RenderConfig& config);

/// Writes frame_<i>.svg for every step and frame_<i>_prime.svg for every
/// step but the last. Returns the written paths in step order.
/// Throws Error{IoError}, Error{MissingPosition}, Error{NotBijective}.
std::vector<std::filesystem::path> render_storyplan(const Graph& g, const Storyplan& plan,
                                                    const std::filesystem::path& dir, const RenderConfig& config);

}  // namespace storyplan
