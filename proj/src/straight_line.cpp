#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

#include "storyplan/error.hpp"
#include "storyplan/geometry.hpp"

namespace storyplan {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

struct GridCoord {
  std::size_t x;
  std::size_t y;
};

// Embedded plane graph that only grows: dummy vertices and edges are added
// inside faces while the rotation stays consistent.
class Triangulator {
 public:
  explicit Triangulator(std::vector<std::vector<Vertex>> rotation) : rot_(std::move(rotation)) {
    for (Vertex v = 0; v < static_cast<Vertex>(rot_.size()); ++v) {
      for (Vertex w : rot_[v]) edges_.insert(make_edge(v, w));
    }
  }

  const std::vector<std::vector<Vertex>>& rotation() const { return rot_; }
  bool has_edge(Vertex a, Vertex b) const { return edges_.contains(make_edge(a, b)); }

  // Inserts `items` into the rotation of v immediately before `before`.
  void insert_before(Vertex v, Vertex before, const std::vector<Vertex>& items) {
    auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), before);
    r.insert(it, items.begin(), items.end());
    for (Vertex w : items) edges_.insert(make_edge(v, w));
  }

  Vertex add_vertex(std::vector<Vertex> rotation) {
    rot_.push_back(std::move(rotation));
    const Vertex id = static_cast<Vertex>(rot_.size()) - 1;
    for (Vertex w : rot_.back()) edges_.insert(make_edge(id, w));
    return id;
  }

  // Walk vertices c_0..c_{k-1} of a face (dart i goes c_i -> c_{i+1}).
  // Returns the (first, second) vertex pair that seeds a canonical ordering
  // whose outer face lies inside this face.
  std::pair<Vertex, Vertex> triangulate(const std::vector<Vertex>& c, bool force_center) {
    const int k = static_cast<int>(c.size());
    auto at = [&](int i) { return c[((i % k) + k) % k]; };
    const bool simple = std::set<Vertex>(c.begin(), c.end()).size() == c.size();
    if (simple && k == 3 && !force_center) return {c[0], c[1]};
    if (simple && !force_center) {
      for (int j = 0; j < k; ++j) {
        bool ok = true;
        for (int l = 2; l <= k - 2 && ok; ++l) ok = !has_edge(at(j), at(j + l));
        if (!ok) continue;
        std::vector<Vertex> fan;
        for (int l = 2; l <= k - 2; ++l) fan.push_back(at(j + l));
        for (int l = 2; l <= k - 2; ++l) insert_before(at(j + l), at(j + l - 1), {at(j)});
        insert_before(at(j), at(j - 1), fan);
        return {at(j), at(j + 2)};
      }
    }
    if (simple) {
      const Vertex center = add_vertex(c);
      for (int i = 0; i < k; ++i) insert_before(at(i), at(i - 1), {center});
      return {center, c[0]};
    }
    // Repeated corners: one dummy per dart, ringed around a center dummy.
    const Vertex first = static_cast<Vertex>(rot_.size());
    const Vertex center = first + k;
    auto dummy = [&](int i) { return first + ((i % k) + k) % k; };
    for (int i = 0; i < k; ++i) {
      rot_.push_back({at(i), at(i + 1), dummy(i + 1), center, dummy(i - 1)});
      for (Vertex w : rot_.back()) edges_.insert(make_edge(dummy(i), w));
    }
    std::vector<Vertex> ring;
    for (int i = 0; i < k; ++i) ring.push_back(dummy(i));
    add_vertex(ring);
    for (int i = 0; i < k; ++i) insert_before(at(i + 1), at(i), {dummy(i + 1), dummy(i)});
    return {center, dummy(0)};
  }

 private:
  std::vector<std::vector<Vertex>> rot_;
  std::set<Edge> edges_;
};

std::vector<Vertex> walk_vertices(const std::vector<Dart>& walk) {
  std::vector<Vertex> out;
  for (const Dart& d : walk) out.push_back(d.from);
  return out;
}

// Straight-line drawing of a triangulated embedding, seeded so that the
// edge (seed.first, seed.second) lies on the outer face.
std::vector<Point> chrobak_payne(const std::vector<std::vector<Vertex>>& rot, std::pair<Vertex, Vertex> seed) {
  const int n = static_cast<int>(rot.size());
  // Relabel: seed.first becomes boost vertex 0.
  std::vector<int> to_boost(n), from_boost(n);
  for (int v = 0; v < n; ++v) to_boost[v] = v;
  std::swap(to_boost[0], to_boost[seed.first]);
  for (int v = 0; v < n; ++v) from_boost[to_boost[v]] = v;

  BoostGraph bg(n);
  std::map<Edge, BoostEdge> edge_of;
  int index = 0;
  auto add = [&](Vertex a, Vertex b) {
    const Edge key = make_edge(a, b);
    if (edge_of.contains(key)) return;
    auto [e, added] = boost::add_edge(to_boost[a], to_boost[b], bg);
    boost::put(boost::edge_index, bg, e, index++);
    edge_of.emplace(key, e);
  };
  add(seed.first, seed.second);
  for (int v = 0; v < n; ++v) {
    for (Vertex w : rot[v]) add(v, w);
  }
  std::vector<std::vector<BoostEdge>> embedding(n);
  for (int v = 0; v < n; ++v) {
    for (Vertex w : rot[v]) embedding[to_boost[v]].push_back(edge_of.at(make_edge(v, w)));
  }
  auto vertex_index = boost::get(boost::vertex_index, bg);
  auto embedding_map = boost::make_iterator_property_map(embedding.begin(), vertex_index);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> ordering;
  boost::planar_canonical_ordering(bg, embedding_map, std::back_inserter(ordering));
  std::vector<GridCoord> coords(n);
  auto drawing = boost::make_iterator_property_map(coords.begin(), vertex_index);
  boost::chrobak_payne_straight_line_drawing(bg, embedding_map, ordering.begin(), ordering.end(), drawing);
  std::vector<Point> out(n);
  for (int b = 0; b < n; ++b) {
    out[from_boost[b]] = Point(static_cast<long long>(coords[b].x), static_cast<long long>(coords[b].y));
  }
  return out;
}

bool cyclic_equal(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[(i + off) % b.size()]) return false;
  }
  return true;
}

// Draws one connected component (local ids, >= 3 vertices).
std::vector<Point> draw_component(const std::vector<std::vector<Vertex>>& rotation, Dart outer_dart) {
  const int n = static_cast<int>(rotation.size());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotation[v]) {
      if (v < w) edges.push_back({v, w});
    }
  }
  for (int attempt = 0; attempt < 4; ++attempt) {
    const bool mirror = attempt % 2 == 1;
    const bool force_center = attempt >= 2;
    auto rot = rotation;
    Dart outer = outer_dart;
    if (mirror) {
      for (auto& r : rot) std::reverse(r.begin(), r.end());
      outer = Dart{outer_dart.to, outer_dart.from};
    }
    const RotationSystem base(rot, {outer});
    const auto outer_walk = base.face_of(outer);
    std::set<Dart> outer_set(outer_walk.begin(), outer_walk.end());
    Triangulator tri(rot);
    std::pair<Vertex, Vertex> seed{-1, -1};
    for (const auto& face : base.faces()) {
      const bool is_outer = outer_set.contains(face.front());
      auto s = tri.triangulate(walk_vertices(face), is_outer && force_center);
      if (is_outer) seed = s;
    }
    std::vector<Point> all = chrobak_payne(tri.rotation(), seed);
    if (mirror) {
      for (auto& p : all) p.x = -p.x;
    }
    all.resize(n);
    PositionMap pos(all.begin(), all.end());
    std::vector<Vertex> vertices(n);
    for (Vertex v = 0; v < n; ++v) vertices[v] = v;
    if (plane_violation(Drawing{pos, vertices, edges})) continue;
    const RotationSystem drawn = rotation_from_positions(n, edges, pos);
    bool same = true;
    for (Vertex v = 0; v < n && same; ++v) same = cyclic_equal(rotation[v], drawn.rotation(v));
    if (!same) continue;
    const auto drawn_outer = drawn.face_of(drawn.outer_darts().front());
    if (std::find(drawn_outer.begin(), drawn_outer.end(), outer_dart) == drawn_outer.end()) continue;
    return all;
  }
  throw Error(ErrorCode::NotPlanar, "could not realise the embedding as a straight-line drawing");
}

}  // namespace

PositionMap straight_line_draw_planar(const Graph& g, const RotationSystem& rs) {
  if (!rs.is_consistent_with(g)) throw Error(ErrorCode::NotPlanar, "rotation system is not a planar embedding of g");
  const int n = g.vertex_count();
  PositionMap positions(n);
  long long offset = 0;
  for (const auto& comp : connected_components(g)) {
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<Point> drawn;
    if (comp.size() == 1) {
      drawn = {Point(0, 0)};
    } else if (comp.size() == 2) {
      drawn = {Point(0, 0), Point(1, 0)};
    } else {
      std::vector<std::vector<Vertex>> rot(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : rs.rotation(comp[i])) rot[i].push_back(local[w]);
      }
      Dart outer{local[comp[0]], rot[0].front()};
      for (const Dart& d : rs.outer_darts()) {
        if (local[d.from] >= 0) outer = Dart{local[d.from], local[d.to]};
      }
      drawn = draw_component(rot, outer);
    }
    Rational min_x = drawn.front().x, max_x = drawn.front().x;
    for (const auto& p : drawn) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      positions[comp[i]] = Point(drawn[i].x - min_x + offset, drawn[i].y);
    }
    offset += static_cast<long long>(Rational(max_x - min_x).convert_to<double>()) + 2;
  }
  return positions;
}

}  // namespace storyplan
