#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "storyplan/geometry.hpp"

namespace storyplan {

/// Acceptance test for a candidate position of the vertex being placed.
using PlacementCheck = std::function<bool(const Point&)>;

/// Candidate points anchor + h * d for small integer directions d, radii h
/// from 1 down to 2^-40 and then up to 2^12, tried in that order. Returns
/// the first point that `accept` takes. When landmarks are given, the
/// bisectors of the angular gaps between the lines from the anchor to the
/// landmarks are tried as well, so thin wedges are not missed.
std::optional<Point> search_near(const Point& anchor, const PlacementCheck& accept,
                                 std::span<const Point> landmarks = {});

enum class PlacementCase {
  NeitherRay,        // triangle vuw meets neither ray
  BothRays,          // meets both rays
  OneRayNoCrossing,  // meets one ray, uw does not cross vv'
  OneRayCrossing,    // meets one ray, uw crosses vv'
  TriangleVicinity,  // u = v' or w = v'': new triangles, place next to v
  Degenerate,        // fewer neighbours or leftover edges, or collinear input
};

std::string to_string(PlacementCase c);

/// Local configuration around the anchor v when a new vertex with visible
/// neighbours v, u, w joins a frame whose leftover edges are vv' and vv''.
struct PlacementContext {
  Point v;
  std::optional<Point> u;
  std::optional<Point> w;
  std::optional<Point> v1;  // v'
  std::optional<Point> v2;  // v''
  /// u coincides with v' (resp. w with v''), so a triangle appears.
  bool u_is_v1 = false;
  bool w_is_v2 = false;
  /// Other drawn vertices of the frame, used to steer the search.
  std::vector<Point> landmarks;
  /// Exact check of the resulting frame (plane, and outerplane if needed).
  PlacementCheck valid;
};

PlacementCase classify(const PlacementContext& ctx);

/// Region of the case analysis the new vertex should lie in; the whole
/// plane for TriangleVicinity and Degenerate.
bool in_region(const PlacementContext& ctx, PlacementCase c, const Point& p);

struct Placement {
  Point point;
  PlacementCase kind = PlacementCase::Degenerate;
  bool in_region = false;
};

/// Position for the new vertex: first a point of the case region accepted
/// by ctx.valid, otherwise any accepted point near v, u, w.
/// Throws Error{NoFeasibleRegion} if no candidate is accepted.
Placement place_cubic_vertex(const PlacementContext& ctx);

}  // namespace storyplan
