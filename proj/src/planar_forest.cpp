#include "storyplan/planar_forest.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "storyplan/error.hpp"

namespace storyplan {

namespace {

std::string edge_str(Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

[[noreturn]] void invariant(const std::string& what) { throw Error(ErrorCode::InvariantViolation, what); }

// Biconnected blocks of a multigraph, as lists of edge indices.
std::vector<std::vector<int>> blocks(int nodes, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(nodes);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[edges[i].first].push_back({edges[i].second, i});
    adj[edges[i].second].push_back({edges[i].first, i});
  }
  std::vector<int> disc(nodes, -1), low(nodes, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> result;
  int time = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = time++;
    for (auto [w, id] : adj[v]) {
      if (id == parent_edge) continue;
      if (disc[w] < 0) {
        stack.push_back(id);
        dfs(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<int> block;
          int top;
          do {
            top = stack.back();
            stack.pop_back();
            block.push_back(top);
          } while (top != id);
          result.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(id);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < nodes; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return result;
}

bool contains_sorted(const std::vector<Edge>& edges, Edge e) {
  return std::binary_search(edges.begin(), edges.end(), make_edge(e.first, e.second));
}

}  // namespace

bool BoundaryStructure::is_outer_edge(Edge e) const { return contains_sorted(outer_edges, e); }
bool BoundaryStructure::is_cycle_edge(Edge e) const { return contains_sorted(cycle_edges, e); }

int WeakDual::degree(int f) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == f) + (b == f);
  return d;
}

int WeakDual::face_of(Dart d) const {
  auto it = std::lower_bound(dart_face.begin(), dart_face.end(), std::make_pair(d, -2));
  if (it == dart_face.end() || it->first != d) return -1;
  return it->second;
}

PlanarForestPlanner::PlanarForestPlanner(const Graph& g, std::optional<PositionMap> positions) : g_(g) {
  const int n = g.vertex_count();
  const auto rs = planarity(g);
  if (!rs) throw Error(ErrorCode::NotPlanar, "graph is not planar");
  if (!is_triangle_free(g)) throw Error(ErrorCode::HasTriangle, "graph contains a triangle");
  if (positions) {
    positions_ = std::move(*positions);
    positions_.resize(n);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    if (auto bad = plane_violation(induced_drawing(g, positions_, all))) {
      throw Error(ErrorCode::NotPlanar, "given drawing is not plane: " + *bad);
    }
  } else {
    positions_ = straight_line_draw_planar(g, *rs);
  }
  alive_.assign(n, 1);
  appeared_.assign(n, 0);
  completed_.assign(n, 0);
  unappeared_nbrs_.resize(n);
  for (Vertex v = 0; v < n; ++v) unappeared_nbrs_[v] = g.degree(v);
}

void PlanarForestPlanner::mark_visible(Vertex v) {
  if (v < 0 || v >= g_.vertex_count()) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
  if (appeared_[v]) return;
  appeared_[v] = 1;
  order_.push_back(v);
  for (Vertex w : g_.neighbors(v)) --unappeared_nbrs_[w];
}

bool PlanarForestPlanner::current_is_forest() const {
  std::vector<Vertex> live;
  for (Vertex v = 0; v < g_.vertex_count(); ++v) {
    if (alive_[v]) live.push_back(v);
  }
  return induces_forest(g_, live);
}

BoundaryStructure PlanarForestPlanner::boundary() const {
  const int n = g_.vertex_count();
  BoundaryStructure bs;
  std::vector<Vertex> live;
  for (Vertex v = 0; v < n; ++v) {
    if (alive_[v]) live.push_back(v);
  }
  const Drawing d = induced_drawing(g_, positions_, live);
  bs.outer.assign(n, 0);
  for (Vertex v : live) bs.outer[v] = 1;
  for (Vertex v : enclosed_vertices(d)) bs.outer[v] = 0;

  const RotationSystem rs = rotation_from_positions(n, d.edges, positions_);
  std::map<Edge, int> traversals;
  for (const auto& walk : rs.outer_faces()) {
    if (!bs.outer[walk.front().from]) continue;  // component nested in a bounded face
    for (const Dart& dart : walk) ++traversals[make_edge(dart.from, dart.to)];
  }
  std::vector<char> on_cycle(n, 0);
  for (auto [e, count] : traversals) {
    bs.outer_edges.push_back(e);
    if (count == 1) {
      bs.cycle_edges.push_back(e);
      on_cycle[e.first] = on_cycle[e.second] = 1;
    }
  }

  std::vector<std::pair<int, int>> cycle_graph(bs.cycle_edges.begin(), bs.cycle_edges.end());
  for (const auto& block : blocks(n, cycle_graph)) {
    std::set<Vertex> vs;
    for (int id : block) {
      vs.insert(cycle_graph[id].first);
      vs.insert(cycle_graph[id].second);
    }
    if (vs.size() != block.size() || vs.size() < 3) {
      invariant("outer boundary block with " + std::to_string(block.size()) + " edges is not a simple cycle");
    }
    bs.outer_cycles.emplace_back(vs.begin(), vs.end());
  }
  std::sort(bs.outer_cycles.begin(), bs.outer_cycles.end());

  for (auto [e, count] : traversals) {
    if (count == 2 && on_cycle[e.first] && on_cycle[e.second]) bs.connectors.push_back(e);
  }
  for (const Edge& e : d.edges) {
    if (!traversals.contains(e) && bs.outer[e.first] && bs.outer[e.second]) bs.chords.push_back(e);
  }
  for (Vertex x : live) {
    if (bs.outer[x]) continue;
    std::vector<Vertex> outer_nbrs;
    for (Vertex w : g_.neighbors(x)) {
      if (alive_[w] && bs.outer[w]) outer_nbrs.push_back(w);
    }
    for (std::size_t i = 0; i < outer_nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < outer_nbrs.size(); ++j) {
        bs.half_chords.push_back({outer_nbrs[i], x, outer_nbrs[j]});
      }
    }
  }

  std::set<Edge> prime(bs.cycle_edges.begin(), bs.cycle_edges.end());
  prime.insert(bs.connectors.begin(), bs.connectors.end());
  prime.insert(bs.chords.begin(), bs.chords.end());
  std::vector<char> structural(n, 0);
  for (auto [a, b] : bs.chords) structural[a] = structural[b] = 1;
  for (const auto& h : bs.half_chords) {
    prime.insert(make_edge(h.a, h.middle));
    prime.insert(make_edge(h.middle, h.b));
    structural[h.a] = structural[h.middle] = structural[h.b] = 1;
  }
  bs.prime_edges.assign(prime.begin(), prime.end());
  std::set<Vertex> prime_vertices;
  for (auto [a, b] : bs.prime_edges) {
    prime_vertices.insert(a);
    prime_vertices.insert(b);
  }
  bs.prime_vertices.assign(prime_vertices.begin(), prime_vertices.end());
  for (Vertex v : bs.prime_vertices) {
    if (bs.outer[v] && !structural[v]) bs.free_vertices.push_back(v);
  }
  return bs;
}

WeakDual PlanarForestPlanner::weak_dual(const BoundaryStructure& bs) const {
  const int n = g_.vertex_count();
  const RotationSystem rs = rotation_from_positions(n, bs.prime_edges, positions_);
  std::set<Dart> outer_darts;
  for (const auto& walk : rs.outer_faces()) outer_darts.insert(walk.begin(), walk.end());

  WeakDual dual;
  for (auto& face : rs.faces()) {
    if (outer_darts.contains(face.front())) continue;
    if (signed_area2(face, positions_) <= 0) invariant("bounded face of G_i' is not counterclockwise");
    const int id = dual.node_count();
    for (const Dart& d : face) dual.dart_face.push_back({d, id});
    dual.faces.push_back(std::move(face));
  }
  std::sort(dual.dart_face.begin(), dual.dart_face.end());

  for (auto [u, v] : bs.prime_edges) {
    const int left = dual.face_of({u, v});
    const int right = dual.face_of({v, u});
    if (left < 0 || right < 0) continue;
    if (left == right) {
      throw Error(ErrorCode::CactusViolation, "weak dual has a loop at edge " + edge_str({u, v}));
    }
    dual.edges.push_back({left, right});
    dual.primal.push_back({u, v});
  }

  const int nodes = dual.node_count();
  std::vector<int> parent(nodes);
  for (int i = 0; i < nodes; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : dual.edges) parent[find(a)] = find(b);
  dual.component.assign(nodes, -1);
  std::map<int, int> label;
  for (int f = 0; f < nodes; ++f) {
    auto [it, fresh] = label.try_emplace(find(f), static_cast<int>(label.size()));
    dual.component[f] = it->second;
  }
  dual.component_count = static_cast<int>(label.size());

  for (const auto& block : blocks(nodes, dual.edges)) {
    std::set<int> vs;
    for (int id : block) {
      vs.insert(dual.edges[id].first);
      vs.insert(dual.edges[id].second);
    }
    const bool bridge = block.size() == 1;
    if (!bridge && vs.size() != block.size()) {
      throw Error(ErrorCode::CactusViolation, "weak dual block with " + std::to_string(vs.size()) + " nodes and " +
                                                  std::to_string(block.size()) + " edges is not a cycle");
    }
  }
  return dual;
}

std::vector<int> PlanarForestPlanner::faces_F(const BoundaryStructure& bs, const WeakDual& dual) const {
  std::set<std::pair<Vertex, std::pair<Vertex, Vertex>>> half_chord_keys;
  for (const auto& h : bs.half_chords) half_chord_keys.insert({h.middle, {std::min(h.a, h.b), std::max(h.a, h.b)}});

  std::vector<int> F;
  for (int f = 0; f < dual.node_count(); ++f) {
    std::set<Edge> inner;
    for (const Dart& d : dual.faces[f]) {
      const Edge e = make_edge(d.from, d.to);
      if (!bs.is_cycle_edge(e)) inner.insert(e);
    }
    if (inner.size() != 2) continue;
    const Edge e1 = *inner.begin(), e2 = *inner.rbegin();
    Vertex x = -1;
    for (Vertex c : {e1.first, e1.second}) {
      if (c == e2.first || c == e2.second) x = c;
    }
    if (x < 0 || bs.outer[x]) continue;
    const Vertex a = e1.first == x ? e1.second : e1.first;
    const Vertex b = e2.first == x ? e2.second : e2.first;
    if (half_chord_keys.contains({x, {std::min(a, b), std::max(a, b)}})) F.push_back(f);
  }

  // The F-face counts below hold for dual components whose nodes all have degree >= 2.
  std::vector<char> in_F(dual.node_count(), 0);
  for (int f : F) in_F[f] = 1;
  for (int c = 0; c < dual.component_count; ++c) {
    std::vector<int> nodes;
    for (int f = 0; f < dual.node_count(); ++f) {
      if (dual.component[f] == c) nodes.push_back(f);
    }
    const bool applies = std::all_of(nodes.begin(), nodes.end(), [&](int f) { return dual.degree(f) >= 2; });
    if (!applies) continue;
    const auto count = std::count_if(nodes.begin(), nodes.end(), [&](int f) { return in_F[f]; });
    if (count < 2) {
      throw Error(ErrorCode::ClaimViolation,
                  "dual component with minimum degree 2 has " + std::to_string(count) + " faces in F");
    }

    // Each chord or half-chord separates the component; both sides hold an F face.
    std::vector<std::vector<Edge>> separators;
    for (const Edge& e : bs.chords) separators.push_back({e});
    for (const auto& h : bs.half_chords) separators.push_back({make_edge(h.a, h.middle), make_edge(h.middle, h.b)});
    for (const auto& sep : separators) {
      std::vector<int> cut;
      for (int id = 0; id < static_cast<int>(dual.edges.size()); ++id) {
        if (dual.component[dual.edges[id].first] != c) continue;
        if (std::find(sep.begin(), sep.end(), dual.primal[id]) != sep.end()) cut.push_back(id);
      }
      if (cut.empty()) continue;
      std::vector<int> side(dual.node_count(), -1);
      std::function<void(int, int)> flood = [&](int f, int label) {
        if (side[f] >= 0) return;
        side[f] = label;
        for (int id = 0; id < static_cast<int>(dual.edges.size()); ++id) {
          if (std::find(cut.begin(), cut.end(), id) != cut.end()) continue;
          auto [a, b] = dual.edges[id];
          if (a == f) flood(b, label);
          if (b == f) flood(a, label);
        }
      };
      int labels = 0;
      for (int id : cut) {
        for (int f : {dual.edges[id].first, dual.edges[id].second}) {
          if (side[f] < 0) flood(f, labels++);
        }
      }
      for (int l = 0; l < labels; ++l) {
        const bool has_F = std::any_of(nodes.begin(), nodes.end(), [&](int f) { return side[f] == l && in_F[f]; });
        if (!has_F) {
          throw Error(ErrorCode::ClaimViolation, "a side of separator " + edge_str(sep.front()) + " has no face in F");
        }
      }
    }
  }
  return F;
}

bool PlanarForestPlanner::is_good(Vertex v, const BoundaryStructure& bs) const {
  if (v < 0 || v >= g_.vertex_count() || !alive_[v] || !bs.outer[v]) return false;
  auto in_closed_nbhd = [&](Vertex u) { return u == v || g_.has_edge(u, v); };
  for (const auto& cycle : bs.outer_cycles) {
    const bool keeps_invisible =
        std::any_of(cycle.begin(), cycle.end(), [&](Vertex u) { return !visible(u) && !in_closed_nbhd(u); });
    if (!keeps_invisible) return false;  // would leave a fully visible cycle
  }
  for (auto [c, d] : bs.chords) {
    if (v == c || v == d) return false;                      // chord end
    if (visible(d) && g_.has_edge(v, c)) return false;       // next to a chord end
    if (visible(c) && g_.has_edge(v, d)) return false;
  }
  for (const auto& h : bs.half_chords) {
    if ((v == h.a && visible(h.b)) || (v == h.b && visible(h.a))) return false;  // half-chord end
  }
  return true;
}

std::vector<Vertex> PlanarForestPlanner::constructive_candidates(const BoundaryStructure& bs, const WeakDual& dual,
                                                                 const std::vector<int>& F) const {
  std::vector<Vertex> out;
  std::vector<char> is_free(g_.vertex_count(), 0);
  for (Vertex v : bs.free_vertices) is_free[v] = 1;
  std::vector<char> chord_end(g_.vertex_count(), 0);
  for (auto [a, b] : bs.chords) chord_end[a] = chord_end[b] = 1;

  auto walk_vertices = [&](int f, Vertex start) {
    const auto& walk = dual.faces[f];
    std::size_t offset = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (walk[i].from == start) offset = i;
    }
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < walk.size(); ++i) vs.push_back(walk[(offset + i) % walk.size()].from);
    return vs;
  };
  auto half_chord_of = [&](int f) {
    const auto& walk = dual.faces[f];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (!bs.outer[walk[i].to]) return HalfChord{walk[i].from, walk[i].to, walk[(i + 1) % walk.size()].to};
    }
    return HalfChord{};
  };

  for (int c = 0; c < dual.component_count; ++c) {
    std::vector<int> nodes;
    for (int f = 0; f < dual.node_count(); ++f) {
      if (dual.component[f] == c) nodes.push_back(f);
    }
    if (nodes.size() == 1 && dual.degree(nodes[0]) == 0) {
      // a lone inner face: any non-neighbour of an invisible boundary vertex
      const auto vs = walk_vertices(nodes[0], dual.faces[nodes[0]].front().from);
      auto it = std::find_if(vs.begin(), vs.end(), [&](Vertex u) { return !visible(u); });
      if (it == vs.end()) continue;
      const Vertex v0 = *it;
      for (Vertex u : vs) {
        if (u != v0 && !g_.has_edge(u, v0) && is_free[u]) out.push_back(u);
      }
      continue;
    }
    for (int f : nodes) {
      if (dual.degree(f) != 1) continue;
      int id = 0;
      while (dual.edges[id].first != f && dual.edges[id].second != f) ++id;
      const Edge e = dual.primal[id];
      if (!contains_sorted(bs.chords, e)) continue;
      for (auto [c1, d1] : {std::pair{e.first, e.second}, std::pair{e.second, e.first}}) {
        if (!visible(c1)) continue;
        // boundary neighbour of the visible endpoint away from the chord
        for (const Dart& dart : dual.faces[f]) {
          if (dart.from == c1 && dart.to != d1) out.push_back(dart.to);
          if (dart.to == c1 && dart.from != d1) out.push_back(dart.from);
        }
      }
      for (Vertex u : walk_vertices(f, e.first)) {
        if (is_free[u]) out.push_back(u);
      }
    }
    std::vector<int> local_F;
    for (int f : F) {
      if (dual.component[f] == c) local_F.push_back(f);
    }
    const bool has_chord = std::any_of(dual.primal.begin(), dual.primal.end(), [&](const Edge& e) {
      return contains_sorted(bs.chords, e) && std::any_of(nodes.begin(), nodes.end(), [&](int f) {
               return dual.face_of({e.first, e.second}) == f;
             });
    });
    auto free_of = [&](int f) {
      const HalfChord h = half_chord_of(f);
      for (Vertex u : walk_vertices(f, h.a >= 0 ? h.a : dual.faces[f].front().from)) {
        if (is_free[u]) out.push_back(u);
      }
    };
    if (has_chord) {
      // F faces away from every chord first, then half-chord endpoints
      for (int f : local_F) {
        const auto vs = walk_vertices(f, dual.faces[f].front().from);
        if (std::none_of(vs.begin(), vs.end(), [&](Vertex u) { return chord_end[u]; })) free_of(f);
      }
    }
    for (int f : local_F) {
      const HalfChord h = half_chord_of(f);
      if (h.a < 0) continue;
      const bool vu = visible(h.a), vw = visible(h.b);
      if (vu && vw) {
        for (int other : local_F) {
          if (other != f) free_of(other);
        }
      } else if (vu) {
        out.push_back(h.a);
      } else if (vw) {
        out.push_back(h.b);
      } else {
        out.push_back(h.a);
        out.push_back(h.b);
      }
    }
    for (int f : local_F) {
      free_of(f);
      for (const Dart& d : dual.faces[f]) {
        if (bs.outer[d.from]) out.push_back(d.from);
      }
    }
  }
  return out;
}

Vertex PlanarForestPlanner::find_good_vertex() {
  const BoundaryStructure bs = boundary();
  const WeakDual dual = weak_dual(bs);
  const std::vector<int> F = faces_F(bs, dual);
  for (Vertex v : constructive_candidates(bs, dual, F)) {
    if (is_good(v, bs)) {
      ++stats_.constructive_picks;
      return v;
    }
  }
  for (Vertex v : bs.prime_vertices) {
    if (is_good(v, bs)) {
      ++stats_.fallback_picks;
      return v;
    }
  }
  for (Vertex v = 0; v < g_.vertex_count(); ++v) {
    if (is_good(v, bs)) {
      ++stats_.fallback_picks;
      return v;
    }
  }
  throw Error(ErrorCode::NoGoodVertex, "no vertex satisfies the picking rules");
}

void PlanarForestPlanner::emit(Vertex x, Vertex picked, const BoundaryStructure& bs) {
  appeared_[x] = 1;
  order_.push_back(x);
  const int step = static_cast<int>(order_.size());
  auto where = [&] { return "step " + std::to_string(step) + ": "; };

  std::vector<Vertex> frame;
  for (Vertex v = 0; v < g_.vertex_count(); ++v) {
    if (appeared_[v] && !completed_[v]) frame.push_back(v);
  }
  std::vector<char> in_frame(g_.vertex_count(), 0);
  for (Vertex v : frame) in_frame[v] = 1;

  // visible outer edges are acyclic (checked with the whole frame)
  if (!induces_forest(g_, frame)) invariant(where() + "frame is not a forest");
  for (Vertex u : frame) {
    if (bs.outer[u]) continue;
    // inner vertices are seen only next to the pick
    if (!g_.has_edge(u, picked)) invariant(where() + "visible inner vertex " + std::to_string(u) + " not adjacent to pick");
    for (Vertex w : g_.neighbors(u)) {
      if (w != picked && in_frame[w] && bs.outer[w]) {
        invariant(where() + "visible inner vertex " + std::to_string(u) + " sees outer vertex " + std::to_string(w));
      }
    }
  }
  for (Vertex u : frame) {
    for (Vertex w : g_.neighbors(u)) {
      if (u > w || !in_frame[w] || bs.is_outer_edge({u, w})) continue;
      // inner edges are seen only at the pick
      const Vertex other = u == picked ? w : w == picked ? u : -1;
      if (other < 0 || bs.outer[other]) invariant(where() + "visible inner edge " + edge_str({u, w}));
    }
  }

  for (Vertex w : g_.neighbors(x)) --unappeared_nbrs_[w];
  for (Vertex v : frame) {
    if (unappeared_nbrs_[v] == 0) completed_[v] = 1;
  }
}

void PlanarForestPlanner::pick(Vertex v) {
  const BoundaryStructure bs = boundary();
  const int before = static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
  if (!appeared_[v]) emit(v, v, bs);
  for (Vertex w : g_.neighbors(v)) {
    if (!appeared_[w]) emit(w, v, bs);
  }
  for (Vertex u = 0; u < g_.vertex_count(); ++u) {
    if (completed_[u]) alive_[u] = 0;
  }
  ++stats_.iterations;
  if (static_cast<int>(std::count(alive_.begin(), alive_.end(), 1)) >= before) {
    invariant("iteration removed no vertex");
  }

  // everything still visible is outer now
  const BoundaryStructure next = boundary();
  for (Vertex u = 0; u < g_.vertex_count(); ++u) {
    if (!visible(u)) continue;
    if (!next.outer[u]) invariant("visible vertex " + std::to_string(u) + " is inner after the iteration");
    for (Vertex w : g_.neighbors(u)) {
      if (u < w && visible(w) && !next.is_outer_edge({u, w})) {
        invariant("visible edge " + edge_str({u, w}) + " is inner after the iteration");
      }
    }
  }
}

void PlanarForestPlanner::finish_with_forest() {
  const int n = g_.vertex_count();
  std::vector<char> queued(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (!alive_[s] || queued[s]) continue;
    std::deque<Vertex> queue{s};
    queued[s] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (!appeared_[v]) {
        appeared_[v] = 1;
        order_.push_back(v);
        ++stats_.tail_vertices;
      }
      for (Vertex w : g_.neighbors(v)) {
        if (alive_[w] && !queued[w]) {
          queued[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
}

Storyplan PlanarForestPlanner::run() {
  while (!current_is_forest()) pick(find_good_vertex());
  finish_with_forest();
  return Storyplan{order_, positions_};
}

Storyplan plan_planar_forest(const Graph& g, std::optional<PositionMap> positions, PlanarForestStats* stats) {
  PlanarForestPlanner planner(g, std::move(positions));
  Storyplan plan = planner.run();
  if (stats) *stats = planner.stats();
  return plan;
}

}  // namespace storyplan
