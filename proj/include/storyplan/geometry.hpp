#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "storyplan/embedding.hpp"
#include "storyplan/graph.hpp"

namespace storyplan {

using Rational = boost::multiprecision::mpq_rational;

/// Exact planar point; mpq keeps both coordinates in lowest terms.
struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long long px, long long py) : x(px), y(py) {}

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }
};

std::string to_string(const Point& p);

struct Segment {
  Point a;
  Point b;
};

/// Sign of (q - p) x (r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orient(const Point& p, const Point& q, const Point& r);

/// p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

/// The closed segments share a point that is not a common endpoint
/// (collinear overlap beyond a shared endpoint counts as crossing).
bool segments_cross(const Segment& s, const Segment& t);

/// Ray from `origin` through `origin + direction` (excluding the origin)
/// meets the closed segment.
bool ray_hits_segment(const Point& origin, const Point& direction, const Segment& s);

/// Per-vertex optional positions, indexed by global vertex id.
using PositionMap = std::vector<std::optional<Point>>;

/// A straight-line drawing of some vertices and edges of a graph. Positions
/// are borrowed; vertices/edges use global vertex ids.
struct Drawing {
  std::span<const std::optional<Point>> positions;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  const Point& at(Vertex v) const;
};

/// Drawing of the subgraph of g induced by `vertices`.
Drawing induced_drawing(const Graph& g, std::span<const std::optional<Point>> positions,
                        std::span<const Vertex> vertices);

/// Description of the first planarity defect (coincident vertices, vertex on
/// a non-incident edge, crossing edges), or nullopt when plane.
/// Throws Error{MissingPosition}.
std::optional<std::string> plane_violation(const Drawing& d);
bool drawing_is_plane(const Drawing& d);

/// Vertices of a plane drawing that are not incident to the unbounded face:
/// a vertex is outer iff it is on the outer walk of its own component and
/// inside no other component's outer walk (exact winding numbers).
std::vector<Vertex> enclosed_vertices(const Drawing& d);

/// Every drawn vertex lies on the outer face. Precondition: drawing is plane.
bool drawing_is_outerplane(const Drawing& d);

/// Counterclockwise rotation system induced by the positions; the outer dart
/// of each component is chosen so its face has minimum signed area.
RotationSystem rotation_from_positions(int n, std::span<const Edge> edges,
                                       std::span<const std::optional<Point>> positions);

/// Twice the signed area enclosed by a face walk.
Rational signed_area2(std::span<const Dart> walk, std::span<const std::optional<Point>> positions);

/// Plane straight-line drawing on the integer grid respecting `rs` (up to
/// the choice of designated outer faces, which become unbounded). Components
/// are laid out side by side. Throws Error{NotPlanar} if rs is not a planar
/// embedding of g.
PositionMap straight_line_draw_planar(const Graph& g, const RotationSystem& rs);

}  // namespace storyplan
