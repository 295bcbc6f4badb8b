#pragma once

#include <string>

#include "storyplan/graph.hpp"
#include "storyplan/storyplan.hpp"

namespace storyplan {

enum class Algorithm { Auto, Bipartite, TwoTree, Subcubic, OuterFace, Planar, FixedDrawing };

std::string to_string(Algorithm a);
/// auto | bipartite | two-tree | subcubic | outer-face | planar | fixed-drawing.
/// Throws Error{ParseError}.
Algorithm parse_algorithm(const std::string& s);

struct PlanResult {
  Storyplan plan;
  Algorithm algorithm = Algorithm::Auto;  // the planner that produced the plan
};

/// Runs the chosen planner for the mode. Auto tries, in order,
/// forest mode: bipartite, outer-face, subcubic, planar;
/// outerplanar mode: two-tree, subcubic;
/// planar mode: the outerplanar list, the forest list, then fixed-drawing.
/// Throws Error{NoApplicablePlanner} listing each planner's refusal.
PlanResult plan_storyplan(const Graph& g, Mode mode, Algorithm algorithm);

}  // namespace storyplan
