#pragma once

// Shared helpers for the test binaries: random graph generators and
// brute-force oracles that deliberately avoid the library's own algorithms.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "storyplan/geometry.hpp"
#include "storyplan/graph.hpp"

namespace storyplan::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::build(n, edges);
}

inline bool brute_has_triangle(const Graph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return true;
  return false;
}

// DFS cycle detection on an undirected simple graph.
inline bool brute_has_cycle(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> state(n, 0);
  std::function<bool(int, int)> dfs = [&](int v, int parent) {
    state[v] = 1;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w, v)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (state[v] == 0 && dfs(v, -1)) return true;
  }
  return false;
}

/// Minor containment by brute-force branch-set labelling. `groups` lists
/// sets of interchangeable pattern vertices (used for symmetry breaking).
inline bool has_minor(const Graph& g, const Graph& pattern, const std::vector<std::vector<int>>& groups) {
  const int n = g.vertex_count();
  const int k = pattern.vertex_count();
  std::vector<int> group_of(k, -1), rank_in_group(k, 0);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (std::size_t r = 0; r < groups[gi].size(); ++r) {
      group_of[groups[gi][r]] = static_cast<int>(gi);
      rank_in_group[groups[gi][r]] = static_cast<int>(r);
    }
  }
  std::vector<int> label(n, -1);  // -1 deleted, else pattern vertex
  std::vector<int> used(k, 0);

  auto check = [&]() {
    for (int h = 0; h < k; ++h) {
      if (used[h] == 0) return false;
      // connectivity of branch set h
      std::vector<int> members;
      for (int v = 0; v < n; ++v) if (label[v] == h) members.push_back(v);
      std::vector<char> seen(n, 0);
      std::vector<int> stack{members[0]};
      seen[members[0]] = 1;
      std::size_t count = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : g.neighbors(v)) {
          if (!seen[w] && label[w] == h) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      if (count != members.size()) return false;
    }
    for (auto [a, b] : pattern.edges()) {
      bool adjacent = false;
      for (auto [u, v] : g.edges()) {
        if ((label[u] == a && label[v] == b) || (label[u] == b && label[v] == a)) {
          adjacent = true;
          break;
        }
      }
      if (!adjacent) return false;
    }
    return true;
  };

  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return check();
    int remaining_needed = 0;
    for (int h = 0; h < k; ++h) remaining_needed += used[h] == 0;
    if (remaining_needed > n - v) return false;
    label[v] = -1;
    if (rec(v + 1)) return true;
    for (int h = 0; h < k; ++h) {
      if (group_of[h] >= 0 && rank_in_group[h] > 0) {
        const int prev = groups[group_of[h]][rank_in_group[h] - 1];
        if (used[prev] == 0) continue;
      }
      label[v] = h;
      ++used[h];
      const bool ok = rec(v + 1);
      --used[h];
      label[v] = -1;
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

struct IntPoint {
  long long x, y;
};

inline long long cross(IntPoint o, IntPoint a, IntPoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool on_closed(IntPoint p, IntPoint a, IntPoint b) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed segments share a point other than a common endpoint.
inline bool int_segments_conflict(IntPoint a, IntPoint b, IntPoint c, IntPoint d) {
  auto same = [](IntPoint p, IntPoint q) { return p.x == q.x && p.y == q.y; };
  const int shared = same(a, c) + same(a, d) + same(b, c) + same(b, d);
  if (shared == 2) return true;
  const long long d1 = cross(a, b, c), d2 = cross(a, b, d), d3 = cross(c, d, a), d4 = cross(c, d, b);
  if (shared == 1) {
    // only collinear overlap beyond the shared point matters
    if (d1 != 0 || d2 != 0) return false;
    const IntPoint s = (same(a, c) || same(a, d)) ? a : b;
    const IntPoint p = same(s, a) ? b : a;
    const IntPoint q = same(s, c) ? d : c;
    return (p.x - s.x) * (q.x - s.x) + (p.y - s.y) * (q.y - s.y) > 0;
  }
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  return on_closed(c, a, b) || on_closed(d, a, b) || on_closed(a, c, d) || on_closed(b, c, d);
}

struct PlaneInstance {
  Graph graph;
  PositionMap positions;
};

/// Random plane straight-line drawing: distinct grid points, then random
/// candidate edges kept when they conflict with no kept edge and pass
/// through no other point. Optionally rejects edges closing a triangle.
inline PlaneInstance random_plane_drawing(int n, int attempts, bool triangle_free, std::mt19937_64& rng,
                                          int grid = 0) {
  if (grid == 0) grid = 3 * n;
  std::uniform_int_distribution<int> coord(0, grid);
  std::vector<IntPoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    IntPoint p{coord(rng), coord(rng)};
    bool fresh = std::none_of(pts.begin(), pts.end(), [&](IntPoint q) { return q.x == p.x && q.y == p.y; });
    if (fresh) pts.push_back(p);
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < attempts && n >= 2; ++t) {
    int u = pick(rng), v = pick(rng);
    if (u == v || adj[u][v]) continue;
    bool ok = true;
    for (int w = 0; w < n && ok; ++w) {
      if (w != u && w != v && on_closed(pts[w], pts[u], pts[v])) ok = false;
    }
    for (auto [a, b] : edges) {
      if (!ok) break;
      if (int_segments_conflict(pts[u], pts[v], pts[a], pts[b])) ok = false;
    }
    if (ok && triangle_free) {
      for (int w = 0; w < n; ++w) {
        if (adj[u][w] && adj[v][w]) ok = false;
      }
    }
    if (!ok) continue;
    adj[u][v] = adj[v][u] = 1;
    edges.push_back(make_edge(u, v));
  }
  PositionMap positions(n);
  for (int v = 0; v < n; ++v) positions[v] = Point(pts[v].x, pts[v].y);
  return {Graph::build(n, edges), std::move(positions)};
}

inline PlaneInstance plane_instance(int n, std::initializer_list<Edge> edges,
                                    std::initializer_list<std::pair<int, int>> points) {
  PositionMap positions;
  for (auto [x, y] : points) positions.push_back(Point(x, y));
  positions.resize(n);
  return {Graph::build(n, edges), std::move(positions)};
}

/// Hand-made triangle-free plane drawings with the features the planar
/// forest planner has to handle: chords, half-chords, inner edges outside
/// G_i', outer cycles sharing a vertex, a connector, a nested component.
inline std::vector<PlaneInstance> structured_triangle_free_instances() {
  std::vector<PlaneInstance> out;
  // 12-gon with chord 0-6, half-chords 2-12-4 and 8-13-10, inner path 13-14-7,
  // vertex 15 between 13 and 0, vertex 16 between 12 and 0.
  out.push_back(plane_instance(
      17,
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {0, 11},
       {0, 6}, {2, 12}, {4, 12}, {8, 13}, {10, 13}, {13, 14}, {7, 14}, {13, 15}, {0, 15}, {12, 16}, {0, 16}},
      {{6, 0}, {5, 3}, {3, 5}, {0, 6}, {-3, 5}, {-5, 3}, {-6, 0}, {-5, -3}, {-3, -5}, {0, -6}, {3, -5}, {5, -3},
       {0, 3}, {0, -3}, {-3, -2}, {2, -1}, {0, 1}}));
  // Two squares sharing vertex 2, each with a half-chord through its centre,
  // and a bridge 6-9 to a third square with a half-chord.
  out.push_back(plane_instance(
      14,
      {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 4}, {2, 5}, {5, 6}, {6, 7}, {2, 7}, {5, 8}, {7, 8},
       {6, 9}, {9, 10}, {10, 11}, {11, 12}, {9, 12}, {9, 13}, {11, 13}},
      {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {8, 4}, {8, 8}, {4, 8}, {6, 6}, {12, 8}, {16, 8}, {16, 12},
       {12, 12}, {14, 10}}));
  // Octagon around a separate square, with a pendant path outside.
  out.push_back(plane_instance(
      14,
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}, {8, 9}, {9, 10}, {10, 11}, {8, 11},
       {0, 12}, {12, 13}},
      {{10, 0}, {7, 7}, {0, 10}, {-7, 7}, {-10, 0}, {-7, -7}, {0, -10}, {7, -7}, {-2, -2}, {2, -2}, {2, 2},
       {-2, 2}, {14, 0}, {18, 0}}));
  // Hexagonal ring: outer 6-cycle joined to an inner 6-cycle by alternate spokes.
  out.push_back(plane_instance(
      12,
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {6, 11},
       {0, 6}, {2, 8}, {4, 10}},
      {{8, 0}, {4, 7}, {-4, 7}, {-8, 0}, {-4, -7}, {4, -7}, {4, 0}, {2, 3}, {-2, 3}, {-4, 0}, {-2, -3},
       {2, -3}}));
  return out;
}

}  // namespace storyplan::testing
