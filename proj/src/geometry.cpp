#include "storyplan/geometry.hpp"

#include <algorithm>
#include <set>

#include "storyplan/error.hpp"

namespace storyplan {

std::string to_string(const Point& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

namespace {

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

int sign(const Rational& r) { return r.sign(); }

}  // namespace

int orient(const Point& p, const Point& q, const Point& r) { return sign(cross(q - p, r - p)); }

bool on_segment(const Point& p, const Segment& s) {
  if (orient(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
         p.y <= std::max(s.a.y, s.b.y);
}

bool segments_cross(const Segment& s, const Segment& t) {
  const int o1 = orient(s.a, s.b, t.a);
  const int o2 = orient(s.a, s.b, t.b);
  const int o3 = orient(t.a, t.b, s.a);
  const int o4 = orient(t.a, t.b, s.b);
  auto endpoint_of_both = [&](const Point& p) { return (p == s.a || p == s.b) && (p == t.a || p == t.b); };

  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis and intersect the intervals.
    const bool use_x = s.a.x != s.b.x || t.a.x != t.b.x;
    auto key = [&](const Point& p) -> const Rational& { return use_x ? p.x : p.y; };
    const Rational lo = std::max(std::min(key(s.a), key(s.b)), std::min(key(t.a), key(t.b)));
    const Rational hi = std::min(std::max(key(s.a), key(s.b)), std::max(key(t.a), key(t.b)));
    if (lo > hi) return false;
    if (lo < hi) return true;
    for (const Point* p : {&s.a, &s.b, &t.a, &t.b}) {
      if (key(*p) == lo) return !endpoint_of_both(*p);
    }
    return true;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  for (const Point* p : {&t.a, &t.b}) {
    if (on_segment(*p, s) && !endpoint_of_both(*p)) return true;
  }
  for (const Point* p : {&s.a, &s.b}) {
    if (on_segment(*p, t) && !endpoint_of_both(*p)) return true;
  }
  return false;
}

bool ray_hits_segment(const Point& origin, const Point& direction, const Segment& s) {
  const Point q = origin + direction;
  const int oa = orient(origin, q, s.a);
  const int ob = orient(origin, q, s.b);
  if (oa == 0 && ob == 0) {
    return dot(s.a - origin, direction) > 0 || dot(s.b - origin, direction) > 0;
  }
  if (oa * ob > 0) return false;
  const Point ab = s.b - s.a;
  const Rational t = cross(s.a - origin, ab) / cross(direction, ab);
  return t > 0;
}

const Point& Drawing::at(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= positions.size() || !positions[v]) {
    throw Error(ErrorCode::MissingPosition, "vertex " + std::to_string(v) + " has no position");
  }
  return *positions[v];
}

Drawing induced_drawing(const Graph& g, std::span<const std::optional<Point>> positions,
                        std::span<const Vertex> vertices) {
  Drawing d{positions, std::vector<Vertex>(vertices.begin(), vertices.end()), {}};
  std::vector<char> member(g.vertex_count(), 0);
  for (Vertex v : vertices) member[v] = 1;
  for (Vertex v : vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && member[w]) d.edges.push_back({v, w});
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::optional<std::string> plane_violation(const Drawing& d) {
  for (Vertex v : d.vertices) d.at(v);
  for (auto [u, v] : d.edges) {
    d.at(u);
    d.at(v);
  }
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < d.vertices.size(); ++j) {
      if (d.at(d.vertices[i]) == d.at(d.vertices[j])) {
        return "vertices " + std::to_string(d.vertices[i]) + " and " + std::to_string(d.vertices[j]) +
               " share position " + to_string(d.at(d.vertices[i]));
      }
    }
  }
  for (auto [u, v] : d.edges) {
    const Segment s{d.at(u), d.at(v)};
    for (Vertex w : d.vertices) {
      if (w != u && w != v && on_segment(d.at(w), s)) {
        return "vertex " + std::to_string(w) + " lies on edge " + std::to_string(u) + "-" + std::to_string(v);
      }
    }
  }
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto [a, b] = d.edges[i];
    const Segment s{d.at(a), d.at(b)};
    for (std::size_t j = i + 1; j < d.edges.size(); ++j) {
      const auto [c, e] = d.edges[j];
      if (segments_cross(s, Segment{d.at(c), d.at(e)})) {
        return "edges " + std::to_string(a) + "-" + std::to_string(b) + " and " + std::to_string(c) + "-" +
               std::to_string(e) + " cross";
      }
    }
  }
  return std::nullopt;
}

bool drawing_is_plane(const Drawing& d) { return !plane_violation(d).has_value(); }

namespace {

int half_of(const Point& dir) { return (dir.y > 0 || (dir.y == 0 && dir.x > 0)) ? 0 : 1; }

bool angle_less(const Point& a, const Point& b) {
  const int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Winding number of the closed walk around p; p must not lie on the walk.
int winding_number(std::span<const Dart> walk, std::span<const std::optional<Point>> positions, const Point& p) {
  int wn = 0;
  for (const Dart& dart : walk) {
    const Point& a = *positions[dart.from];
    const Point& b = *positions[dart.to];
    if (a.y <= p.y) {
      if (b.y > p.y && orient(a, b, p) > 0) ++wn;
    } else if (b.y <= p.y && orient(a, b, p) < 0) {
      --wn;
    }
  }
  return wn;
}

}  // namespace

std::vector<Vertex> enclosed_vertices(const Drawing& d) {
  const int n = static_cast<int>(d.positions.size());
  for (Vertex v : d.vertices) d.at(v);
  const RotationSystem rs = rotation_from_positions(n, d.edges, d.positions);
  // A vertex is outer iff it lies on the outer walk of its own component and
  // no other component surrounds it. Straight rays are not enough: the
  // unbounded face may reach a vertex only through a bent corridor.
  std::vector<char> on_own_outer(n, 0);
  std::vector<char> has_edges(n, 0);
  const auto outer_walks = rs.outer_faces();
  for (const auto& walk : outer_walks) {
    for (const Dart& dart : walk) on_own_outer[dart.from] = 1;
  }
  for (auto [u, v] : d.edges) has_edges[u] = has_edges[v] = 1;

  std::vector<Vertex> enclosed;
  for (Vertex p : d.vertices) {
    bool outer = !has_edges[p] || on_own_outer[p];
    for (std::size_t c = 0; c < outer_walks.size() && outer; ++c) {
      const auto& walk = outer_walks[c];
      const bool own = std::any_of(walk.begin(), walk.end(), [&](const Dart& dart) { return dart.from == p; });
      if (!own && winding_number(walk, d.positions, d.at(p)) != 0) outer = false;
    }
    if (!outer) enclosed.push_back(p);
  }
  std::sort(enclosed.begin(), enclosed.end());
  return enclosed;
}

bool drawing_is_outerplane(const Drawing& d) { return enclosed_vertices(d).empty(); }

Rational signed_area2(std::span<const Dart> walk, std::span<const std::optional<Point>> positions) {
  Rational area = 0;
  for (const Dart& dart : walk) area += cross(*positions[dart.from], *positions[dart.to]);
  return area;
}

RotationSystem rotation_from_positions(int n, std::span<const Edge> edges,
                                       std::span<const std::optional<Point>> positions) {
  std::vector<std::vector<Vertex>> rotation(n);
  for (auto [u, v] : edges) {
    rotation[u].push_back(v);
    rotation[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (rotation[v].empty()) continue;
    const Point& origin = *positions[v];
    std::sort(rotation[v].begin(), rotation[v].end(),
              [&](Vertex a, Vertex b) { return angle_less(*positions[a] - origin, *positions[b] - origin); });
  }
  RotationSystem plain(rotation, {});
  // Component labels via union-find over the edge list.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  std::vector<std::optional<std::pair<Rational, Dart>>> best(n);
  for (const auto& face : plain.faces()) {
    const int root = find(face.front().from);
    Rational area = signed_area2(face, positions);
    if (!best[root] || area < best[root]->first) best[root] = std::make_pair(area, face.front());
  }
  std::vector<Dart> outer;
  for (Vertex v = 0; v < n; ++v) {
    if (best[v]) outer.push_back(best[v]->second);
  }
  std::sort(outer.begin(), outer.end());
  return RotationSystem(std::move(rotation), std::move(outer));
}

}  // namespace storyplan
