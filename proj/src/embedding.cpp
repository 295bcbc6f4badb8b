#include "storyplan/embedding.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "storyplan/error.hpp"

namespace storyplan {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(int n, std::span<const Edge> edges) {
  BoostGraph bg(n);
  int index = 0;
  for (auto [u, v] : edges) {
    auto [e, added] = boost::add_edge(u, v, bg);
    boost::put(boost::edge_index, bg, e, index++);
  }
  return bg;
}

}  // namespace

RotationSystem::RotationSystem(std::vector<std::vector<Vertex>> rotation, std::vector<Dart> outer_darts)
    : rotation_(std::move(rotation)), outer_darts_(std::move(outer_darts)) {}

int RotationSystem::position_of(Vertex v, Vertex neighbor) const {
  const auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), neighbor);
  if (it == rot.end()) {
    throw Error(ErrorCode::OutOfRange,
                "vertex " + std::to_string(neighbor) + " not in rotation of " + std::to_string(v));
  }
  return static_cast<int>(it - rot.begin());
}

Dart RotationSystem::next_in_face(Dart d) const {
  const auto& rot = rotation_[d.to];
  const int pos = position_of(d.to, d.from);
  const int k = static_cast<int>(rot.size());
  return Dart{d.to, rot[(pos + k - 1) % k]};
}

std::vector<Dart> RotationSystem::face_of(Dart start) const {
  std::vector<Dart> walk;
  Dart d = start;
  do {
    walk.push_back(d);
    d = next_in_face(d);
  } while (d != start);
  return walk;
}

std::vector<std::vector<Dart>> RotationSystem::faces() const {
  std::set<Dart> seen;
  std::vector<std::vector<Dart>> result;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex w : rotation_[v]) {
      const Dart d{v, w};
      if (seen.contains(d)) continue;
      auto walk = face_of(d);
      seen.insert(walk.begin(), walk.end());
      result.push_back(std::move(walk));
    }
  }
  return result;
}

std::vector<std::vector<Dart>> RotationSystem::outer_faces() const {
  std::vector<std::vector<Dart>> result;
  for (const Dart& d : outer_darts_) result.push_back(face_of(d));
  return result;
}

bool RotationSystem::is_consistent_with(const Graph& g) const {
  if (vertex_count() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> sorted(rotation_[v].begin(), rotation_[v].end());
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), g.neighbors(v).begin(), g.neighbors(v).end())) return false;
  }
  // Euler per component: V - E + F = 2.
  const auto comps = connected_components(g);
  std::vector<int> comp_of(g.vertex_count());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<long> euler(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) euler[c] = static_cast<long>(comps[c].size());
  for (auto [u, v] : g.edges()) euler[comp_of[u]] -= 1;
  for (const auto& face : faces()) euler[comp_of[face.front().from]] += 1;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const bool isolated = comps[c].size() == 1;
    if (euler[c] != (isolated ? 1 : 2)) return false;
  }
  // each designated outer dart belongs to a distinct component
  std::set<int> covered;
  for (const Dart& d : outer_darts_) {
    if (!g.has_edge(d.from, d.to) || !covered.insert(comp_of[d.from]).second) return false;
  }
  return true;
}

std::optional<RotationSystem> planarity(const Graph& g) {
  const int n = g.vertex_count();
  BoostGraph bg = to_boost(n, g.edges());
  std::vector<std::vector<BoostEdge>> embedding(n);
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) return std::nullopt;

  std::vector<std::vector<Vertex>> rotation(n);
  for (int v = 0; v < n; ++v) {
    for (const auto& e : embedding[v]) {
      const int s = static_cast<int>(boost::source(e, bg));
      const int t = static_cast<int>(boost::target(e, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  }
  std::vector<Dart> outer;
  for (const auto& comp : connected_components(g)) {
    const Vertex first = comp.front();
    if (!rotation[first].empty()) outer.push_back({first, rotation[first].front()});
  }
  return RotationSystem(std::move(rotation), std::move(outer));
}

bool is_planar(const Graph& g) {
  const long n = g.vertex_count();
  const long m = static_cast<long>(g.edge_count());
  if (n <= 4 || m <= 8) return true;
  if (m > 3 * n - 6) return false;
  BoostGraph bg = to_boost(static_cast<int>(n), g.edges());
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_outerplanar(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 3) return true;
  if (static_cast<long>(g.edge_count()) > 2L * n - 3) return false;
  std::vector<Edge> edges(g.edges());
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, n});
  BoostGraph bg = to_boost(n + 1, edges);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<RotationSystem> outerplanar_embedding(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges(g.edges());
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, n});
  const auto with_apex = planarity(Graph::build(n + 1, edges));
  if (!with_apex) return std::nullopt;

  std::vector<std::vector<Vertex>> rotation(n);
  std::vector<Vertex> after_apex(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const auto rot = with_apex->rotation(v);
    const auto k = rot.size();
    const auto apex_pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), n) - rot.begin());
    // start right after the apex so the apex gap closes between back() and front()
    for (std::size_t i = 1; i < k; ++i) rotation[v].push_back(rot[(apex_pos + i) % k]);
    if (!rotation[v].empty()) after_apex[v] = rotation[v].front();
  }
  std::vector<Dart> outer;
  for (const auto& comp : connected_components(g)) {
    const Vertex first = comp.front();
    // the face through the closed gap at `first` contains the dart y -> first
    if (after_apex[first] >= 0) outer.push_back({after_apex[first], first});
  }
  return RotationSystem(std::move(rotation), std::move(outer));
}

StackingOrder stacking_order(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw Error(ErrorCode::Not2Tree, "a 2-tree has at least 3 vertices");
  if (g.edge_count() != static_cast<std::size_t>(2 * n - 3)) {
    throw Error(ErrorCode::Not2Tree, "a 2-tree on n vertices has 2n-3 edges");
  }
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  auto removable = [&](Vertex v) {
    if (adj[v].size() != 2) return false;
    const Vertex a = *adj[v].begin(), b = *adj[v].rbegin();
    return adj[a].contains(b);
  };
  std::vector<char> removed(n, 0);
  std::set<Vertex> candidates;
  for (Vertex v = 0; v < n; ++v) {
    if (removable(v)) candidates.insert(v);
  }
  std::vector<Vertex> eliminated;
  std::vector<Edge> base;
  while (static_cast<int>(eliminated.size()) < n - 3) {
    if (candidates.empty()) throw Error(ErrorCode::Not2Tree, "no simplicial degree-2 vertex left");
    const Vertex v = *candidates.begin();
    candidates.erase(candidates.begin());
    if (!removable(v)) continue;
    const Vertex a = *adj[v].begin(), b = *adj[v].rbegin();
    adj[a].erase(v);
    adj[b].erase(v);
    adj[v].clear();
    removed[v] = 1;
    eliminated.push_back(v);
    base.push_back(make_edge(a, b));
    for (Vertex w : {a, b}) {
      if (removable(w)) candidates.insert(w);
      else candidates.erase(w);
    }
  }
  StackingOrder result;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) result.order.push_back(v);
  }
  const Vertex x = result.order[0], y = result.order[1], z = result.order[2];
  if (!adj[x].contains(y) || !adj[x].contains(z) || !adj[y].contains(z)) {
    throw Error(ErrorCode::Not2Tree, "remaining three vertices do not form a triangle");
  }
  result.stacked_on.assign(3, Edge{-1, -1});
  for (auto i = eliminated.size(); i-- > 0;) {
    result.order.push_back(eliminated[i]);
    result.stacked_on.push_back(base[i]);
  }
  return result;
}

bool replays_stacking_order(const Graph& g, const StackingOrder& sigma) {
  const int n = g.vertex_count();
  if (static_cast<int>(sigma.order.size()) != n || n < 3) return false;
  if (sigma.stacked_on.size() != sigma.order.size()) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = sigma.order[i];
    if (v < 0 || v >= n || position[v] >= 0) return false;
    position[v] = i;
  }
  std::set<Edge> built{make_edge(sigma.order[0], sigma.order[1]), make_edge(sigma.order[0], sigma.order[2]),
                       make_edge(sigma.order[1], sigma.order[2])};
  for (int i = 3; i < n; ++i) {
    const Edge base = make_edge(sigma.stacked_on[i].first, sigma.stacked_on[i].second);
    if (!built.contains(base)) return false;
    built.insert(make_edge(base.first, sigma.order[i]));
    built.insert(make_edge(base.second, sigma.order[i]));
  }
  return std::equal(built.begin(), built.end(), g.edges().begin(), g.edges().end());
}

}  // namespace storyplan
