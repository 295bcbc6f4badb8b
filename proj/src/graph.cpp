#include "storyplan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "storyplan/error.hpp"

namespace storyplan {

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative vertex count");
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::OutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
    g.edges_.push_back(make_edge(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeated");
  }
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  if (adjacency_[u].size() > adjacency_[v].size()) std::swap(u, v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> local(vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (Vertex v : vertices) {
    for (Vertex w : adjacency_[v]) {
      if (v < w && local[w] >= 0) sub.push_back(make_edge(local[v], local[w]));
    }
  }
  return build(static_cast<int>(vertices.size()), sub);
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    // sorted-list intersection
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i; else ++j;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> result;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(result.size());
    result.emplace_back();
    std::queue<Vertex> queue;
    queue.push(s);
    comp[s] = id;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      result.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          queue.push(w);
        }
      }
    }
    std::sort(result.back().begin(), result.back().end());
  }
  return result;
}

bool is_forest(const Graph& g) {
  // A graph is acyclic iff |E| = |V| - #components.
  const auto comps = connected_components(g);
  return g.edge_count() + comps.size() == static_cast<std::size_t>(g.vertex_count());
}

bool induces_forest(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<char> member(g.vertex_count(), 0);
  for (Vertex v : vertices) {
    member[v] = 1;
    parent[v] = v;
  }
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex v : vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (w <= v || !member[w]) continue;
      int a = find(v), b = find(w);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

std::vector<int> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          return {};
        }
      }
    }
  }
  return colour;
}

}  // namespace storyplan
