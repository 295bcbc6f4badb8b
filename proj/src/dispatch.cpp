#include "storyplan/dispatch.hpp"

#include <vector>

#include "storyplan/error.hpp"
#include "storyplan/planar_forest.hpp"
#include "storyplan/planners.hpp"

namespace storyplan {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Auto:
      return "auto";
    case Algorithm::Bipartite:
      return "bipartite";
    case Algorithm::TwoTree:
      return "two-tree";
    case Algorithm::Subcubic:
      return "subcubic";
    case Algorithm::OuterFace:
      return "outer-face";
    case Algorithm::Planar:
      return "planar";
    case Algorithm::FixedDrawing:
      return "fixed-drawing";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& s) {
  for (Algorithm a : {Algorithm::Auto, Algorithm::Bipartite, Algorithm::TwoTree, Algorithm::Subcubic,
                      Algorithm::OuterFace, Algorithm::Planar, Algorithm::FixedDrawing}) {
    if (to_string(a) == s) return a;
  }
  throw Error(ErrorCode::ParseError, "unknown algorithm '" + s + "'");
}

namespace {

// A forest plan serves every mode; outerplanar plans serve all but forest.
std::optional<Storyplan> run(const Graph& g, Mode mode, Algorithm a, std::string& why) {
  switch (a) {
    case Algorithm::Bipartite:
      return plan_bipartite_forest(g);
    case Algorithm::OuterFace:
      return plan_outerplanar_forest(g);
    case Algorithm::Planar:
      return plan_planar_forest(g);
    case Algorithm::Subcubic:
      return mode == Mode::Forest ? plan_subcubic_forest(g) : plan_subcubic_outerplanar(g);
    case Algorithm::TwoTree:
      if (mode == Mode::Forest) {
        why = "two-tree plans are outerplanar, not forest";
        return std::nullopt;
      }
      return plan_partial_two_tree_outerplanar(g);
    case Algorithm::FixedDrawing:
      if (mode != Mode::Planar) {
        why = "a fixed drawing only guarantees planar frames";
        return std::nullopt;
      }
      return plan_fixed_drawing(g);
    case Algorithm::Auto:
      break;
  }
  return std::nullopt;
}

}  // namespace

PlanResult plan_storyplan(const Graph& g, Mode mode, Algorithm algorithm) {
  std::vector<Algorithm> candidates;
  const std::vector<Algorithm> forest = {Algorithm::Bipartite, Algorithm::OuterFace, Algorithm::Subcubic,
                                         Algorithm::Planar};
  const std::vector<Algorithm> outer = {Algorithm::TwoTree, Algorithm::Subcubic};
  if (algorithm != Algorithm::Auto) {
    candidates = {algorithm};
  } else if (mode == Mode::Forest) {
    candidates = forest;
  } else if (mode == Mode::Outerplanar) {
    candidates = outer;
  } else {
    candidates = outer;
    candidates.insert(candidates.end(), forest.begin(), forest.end());
    candidates.push_back(Algorithm::FixedDrawing);
  }

  std::string diagnostics;
  for (Algorithm a : candidates) {
    std::string why;
    try {
      if (auto plan = run(g, mode, a, why)) return {std::move(*plan), a};
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::NotBipartite:
        case ErrorCode::Not2Tree:
        case ErrorCode::NotPlanar:
        case ErrorCode::IsK4:
        case ErrorCode::DegreeTooHigh:
        case ErrorCode::HasTriangle:
        case ErrorCode::NotOuterplanar:
          why = e.what();
          break;
        default:
          throw;
      }
    }
    if (!diagnostics.empty()) diagnostics += "; ";
    diagnostics += to_string(a) + ": " + why;
  }
  throw Error(ErrorCode::NoApplicablePlanner, "no planner applies in " + to_string(mode) + " mode (" + diagnostics + ")");
}

}  // namespace storyplan
