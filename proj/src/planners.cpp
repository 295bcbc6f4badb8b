#include "storyplan/planners.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "storyplan/error.hpp"
#include "storyplan/placement.hpp"

namespace storyplan {

namespace {

Rational max_x(const PositionMap& pos) {
  std::optional<Rational> best;
  for (const auto& p : pos) {
    if (p && (!best || p->x > *best)) best = p->x;
  }
  return best.value_or(Rational(-2));
}

bool frame_ok(const Graph& g, const PositionMap& pos, std::span<const Vertex> visible, bool outerplane) {
  const Drawing d = induced_drawing(g, pos, visible);
  if (!drawing_is_plane(d)) return false;
  return !outerplane || drawing_is_outerplane(d);
}

}  // namespace

// ---------------------------------------------------------------------------
// bipartite

Storyplan plan_bipartite_forest(const Graph& g) {
  const int n = g.vertex_count();
  const auto colour = bipartition(g);
  if (colour.empty() && n > 0) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
  Storyplan plan;
  plan.positions.resize(n);
  int a = 0, b = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] == 0) {
      plan.order.push_back(v);
      plan.positions[v] = Point(a++, 0);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] == 1) {
      plan.order.push_back(v);
      plan.positions[v] = Point(b++, 1);
    }
  }
  return plan;
}

// ---------------------------------------------------------------------------
// 2-trees

TwoTreeDecomposition two_tree_decomposition(int n, const StackingOrder& sigma) {
  TwoTreeDecomposition t;
  t.children.assign(n, {});
  t.parent.assign(n, -1);
  t.stacked_on.assign(n, {-1, -1});
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < sigma.order.size(); ++i) position[sigma.order[i]] = static_cast<int>(i);
  for (int i = 0; i < 3; ++i) t.root[i] = sigma.order[i];
  for (std::size_t i = 3; i < sigma.order.size(); ++i) {
    const Vertex x = sigma.order[i];
    auto [a, b] = sigma.stacked_on[i];
    t.stacked_on[x] = {a, b};
    const Vertex later = position[a] > position[b] ? a : b;
    if (position[later] < 3) {
      t.root_children.push_back(x);
    } else {
      t.parent[x] = later;
      t.children[later].push_back(x);
    }
  }
  return t;
}

Order two_tree_order(const TwoTreeDecomposition& t) {
  Order order(t.root.begin(), t.root.end());
  std::vector<Vertex> stack(t.root_children.rbegin(), t.root_children.rend());
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

Storyplan plan_two_tree_outerplanar(const Graph& g) { return plan_two_tree_outerplanar(g, stacking_order(g)); }

Storyplan plan_two_tree_outerplanar(const Graph& g, const StackingOrder& sigma) {
  if (!replays_stacking_order(g, sigma)) throw Error(ErrorCode::Not2Tree, "stacking order does not rebuild the graph");
  const int n = g.vertex_count();
  const TwoTreeDecomposition t = two_tree_decomposition(n, sigma);
  Storyplan plan{two_tree_order(t), PositionMap(n)};
  const auto fs = frames(g, plan.order);

  plan.positions[t.root[0]] = Point(0, 0);
  plan.positions[t.root[1]] = Point(4, 0);
  plan.positions[t.root[2]] = Point(2, 4);
  for (int i = 3; i < n; ++i) {
    const Vertex x = plan.order[i];
    const Vertex p = t.parent[x];
    if (p >= 0) {
      // the parent is still visible, on the outer face, with at most its two
      // stacking neighbours around
      const auto& prev = *fs[i - 1].prime;
      const Drawing d = induced_drawing(g, plan.positions, prev);
      const auto deg = std::count_if(d.edges.begin(), d.edges.end(), [&](const Edge& e) {
        return e.first == p || e.second == p;
      });
      const auto enclosed = enclosed_vertices(d);
      if (!std::binary_search(prev.begin(), prev.end(), p) || deg > 2 ||
          std::binary_search(enclosed.begin(), enclosed.end(), p)) {
        throw Error(ErrorCode::InvariantViolation,
                    "parent " + std::to_string(p) + " of " + std::to_string(x) + " is not an outer vertex of degree at most 2 (degree " + std::to_string(deg) + ")");
      }
    }
    const auto [a, b] = t.stacked_on[x];
    const Point pa = *plan.positions[a], pb = *plan.positions[b];
    const Point along = pb - pa;
    const Point normal(-along.y, along.x);
    auto valid = [&](const Point& q) {
      plan.positions[x] = q;
      const bool ok = frame_ok(g, plan.positions, fs[i].visible, true);
      plan.positions[x].reset();
      return ok;
    };
    std::optional<Point> chosen;
    Rational h(1, 2);
    for (int k = 0; k < 48 && !chosen; ++k, h /= 2) {
      for (const Rational& s : {Rational(1, 2), Rational(1, 4), Rational(3, 4)}) {
        for (int side : {1, -1}) {
          const Point q = pa + s * along + (side * h) * normal;
          if (valid(q)) {
            chosen = q;
            break;
          }
        }
        if (chosen) break;
      }
    }
    if (!chosen) chosen = search_near(pa + Rational(1, 2) * along, valid);
    if (!chosen) throw Error(ErrorCode::NoFeasibleRegion, "no outer position for vertex " + std::to_string(x));
    plan.positions[x] = *chosen;
  }
  return plan;
}

Graph complete_to_two_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw Error(ErrorCode::Not2Tree, "a 2-tree has at least 3 vertices");
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  // eliminate degree <= 2 vertices with fill; record later neighbours
  std::vector<char> gone(n, 0);
  std::vector<Vertex> elimination;
  std::vector<std::vector<Vertex>> later(n);
  std::set<std::pair<std::size_t, Vertex>> by_degree;
  for (Vertex v = 0; v < n; ++v) by_degree.insert({adj[v].size(), v});
  while (static_cast<int>(elimination.size()) < n - 3) {
    const auto [deg, v] = *by_degree.begin();
    if (deg > 2) throw Error(ErrorCode::Not2Tree, "graph has treewidth greater than 2");
    by_degree.erase(by_degree.begin());
    gone[v] = 1;
    elimination.push_back(v);
    later[v].assign(adj[v].begin(), adj[v].end());
    for (Vertex w : later[v]) {
      by_degree.erase({adj[w].size(), w});
      adj[w].erase(v);
    }
    if (later[v].size() == 2) {
      const Vertex a = later[v][0], b = later[v][1];
      if (!adj[a].contains(b)) {
        for (Vertex w : {a, b}) by_degree.erase({adj[w].size(), w});
        adj[a].insert(b);
        adj[b].insert(a);
      }
    }
    for (Vertex w : later[v]) by_degree.insert({adj[w].size(), w});
  }
  std::vector<Vertex> base;
  for (Vertex v = 0; v < n; ++v) {
    if (!gone[v]) base.push_back(v);
  }
  // rebuild in reverse: triangle, then stack each eliminated vertex
  std::set<Edge> edges{make_edge(base[0], base[1]), make_edge(base[0], base[2]), make_edge(base[1], base[2])};
  std::vector<std::vector<Vertex>> nbr(n);
  for (auto [u, v] : edges) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  for (auto it = elimination.rbegin(); it != elimination.rend(); ++it) {
    const Vertex v = *it;
    Edge host;
    if (later[v].size() == 2) {
      host = make_edge(later[v][0], later[v][1]);
    } else {
      const Vertex a = later[v].empty() ? base[0] : later[v][0];
      host = make_edge(a, nbr[a].front());
    }
    edges.insert(make_edge(v, host.first));
    edges.insert(make_edge(v, host.second));
    for (Vertex w : {host.first, host.second}) {
      nbr[v].push_back(w);
      nbr[w].push_back(v);
    }
  }
  return Graph::build(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Storyplan plan_partial_two_tree_outerplanar(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 2) {
    Storyplan plan;
    for (Vertex v = 0; v < n; ++v) {
      plan.order.push_back(v);
      plan.positions.emplace_back(Point(v, 0));
    }
    return plan;
  }
  return plan_two_tree_outerplanar(complete_to_two_tree(g));
}

// ---------------------------------------------------------------------------
// subcubic

void DegreeBuckets::set(Vertex v, int deg_h, int deg_g) {
  erase(v);
  key_[v] = {deg_h, deg_g};
  buckets_[{deg_h, deg_g}].insert(v);
}

void DegreeBuckets::erase(Vertex v) {
  auto it = key_.find(v);
  if (it == key_.end()) return;
  auto bucket = buckets_.find(it->second);
  bucket->second.erase(v);
  if (bucket->second.empty()) buckets_.erase(bucket);
  key_.erase(it);
}

std::optional<Vertex> DegreeBuckets::best() const {
  if (buckets_.empty()) return std::nullopt;
  return *buckets_.rbegin()->second.begin();
}

namespace {

bool is_k4_component(const Graph& g, std::span<const Vertex> comp) {
  if (comp.size() != 4) return false;
  for (Vertex v : comp) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

Storyplan plan_subcubic(const Graph& g, bool forest) {
  const int n = g.vertex_count();
  if (g.max_degree() > 3) throw Error(ErrorCode::DegreeTooHigh, "maximum degree exceeds 3");
  if (forest && !is_triangle_free(g)) throw Error(ErrorCode::HasTriangle, "graph contains a triangle");
  for (const auto& comp : connected_components(g)) {
    if (is_k4_component(g, comp)) {
      throw Error(ErrorCode::IsK4, "a component is K4; every subcubic graph except K4 is supported");
    }
  }

  Storyplan plan;
  plan.positions.resize(n);
  std::vector<char> placed(n, 0);
  std::vector<int> unplaced_nbrs(n), deg_h(n, 0);
  for (Vertex v = 0; v < n; ++v) unplaced_nbrs[v] = g.degree(v);
  std::set<Vertex> prime;  // V(G'_{i-1}): placed, not completed
  DegreeBuckets buckets;
  int local_step = 0, component_size = 0;
  std::vector<int> comp_size(n);
  for (const auto& comp : connected_components(g)) {
    for (Vertex v : comp) comp_size[v] = static_cast<int>(comp.size());
  }

  auto prime_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += prime.contains(w);
    return d;
  };
  auto prime_edges = [&]() {
    std::vector<Edge> out;
    for (Vertex v : prime) {
      for (Vertex w : g.neighbors(v)) {
        if (v < w && prime.contains(w)) out.push_back({v, w});
      }
    }
    return out;
  };
  auto claim = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::ClaimViolation, what);
  };

  for (int step = 1; step <= n; ++step) {
    const std::vector<Edge> before = prime_edges();
    Vertex x = -1, anchor = -1;
    if (prime.empty()) {
      x = static_cast<Vertex>(std::find(placed.begin(), placed.end(), 0) - placed.begin());
      local_step = 0;
      component_size = comp_size[x];
    } else {
      anchor = *buckets.best();
      if (forest && before.size() == 2) {
        // pick the shared vertex of the two reduced-frame edges
        const auto [a, b] = before[0];
        anchor = (a == before[1].first || a == before[1].second) ? a : b;
      }
      for (Vertex w : g.neighbors(anchor)) {
        if (!placed[w]) {
          x = w;
          break;
        }
      }
    }
    ++local_step;

    // positions
    std::vector<Vertex> visible(prime.begin(), prime.end());
    visible.insert(std::upper_bound(visible.begin(), visible.end(), x), x);
    if (anchor < 0) {
      plan.positions[x] = Point(max_x(plan.positions) + 2, Rational(0));
    } else {
      PlacementContext ctx;
      ctx.v = *plan.positions[anchor];
      std::vector<Vertex> leftover;
      for (Vertex w : g.neighbors(anchor)) {
        if (prime.contains(w)) leftover.push_back(w);
      }
      std::vector<Vertex> others;
      for (Vertex w : g.neighbors(x)) {
        if (placed[w] && w != anchor) others.push_back(w);
      }
      // neighbours of x that are also leftover ends of v come first, matched
      std::stable_partition(others.begin(), others.end(), [&](Vertex w) {
        return std::find(leftover.begin(), leftover.end(), w) != leftover.end();
      });
      std::stable_partition(leftover.begin(), leftover.end(), [&](Vertex w) {
        return std::find(others.begin(), others.end(), w) != others.end();
      });
      if (others.size() > 0) ctx.u = *plan.positions[others[0]];
      if (others.size() > 1) ctx.w = *plan.positions[others[1]];
      if (leftover.size() > 0) ctx.v1 = *plan.positions[leftover[0]];
      if (leftover.size() > 1) ctx.v2 = *plan.positions[leftover[1]];
      ctx.u_is_v1 = others.size() > 0 && leftover.size() > 0 && others[0] == leftover[0];
      ctx.w_is_v2 = others.size() > 1 && leftover.size() > 1 && others[1] == leftover[1];
      for (Vertex v : visible) {
        if (v != x) ctx.landmarks.push_back(*plan.positions[v]);
      }
      ctx.valid = [&](const Point& q) {
        plan.positions[x] = q;
        const bool ok = frame_ok(g, plan.positions, visible, !forest);
        plan.positions[x].reset();
        return ok;
      };
      plan.positions[x] = place_cubic_vertex(ctx).point;
    }
    plan.order.push_back(x);

    // frame G_i: G'_{i-1} plus the edges of x
    int new_edges = 0;
    for (Vertex w : g.neighbors(x)) new_edges += placed[w];
    claim(before.size() + new_edges <= 5, "frame " + std::to_string(step) + " has more than five edges");

    // update state
    placed[x] = 1;
    prime.insert(x);
    std::vector<Vertex> touched{x};
    for (Vertex w : g.neighbors(x)) {
      --unplaced_nbrs[w];
      if (placed[w]) {
        ++deg_h[w];
        ++deg_h[x];
        touched.push_back(w);
      }
    }
    std::vector<Vertex> completed;
    for (Vertex v : touched) {
      if (unplaced_nbrs[v] == 0) completed.push_back(v);
    }
    for (Vertex v : completed) {
      prime.erase(v);
      buckets.erase(v);
      for (Vertex w : g.neighbors(v)) touched.push_back(w);
    }
    for (Vertex v : touched) {
      if (prime.contains(v)) buckets.set(v, deg_h[v], prime_degree(v));
    }

    // reduced frame G'_i
    const std::vector<Edge> after = prime_edges();
    const bool interior = local_step >= 4 && local_step <= component_size - 1;
    const bool bounded = forest ? local_step <= component_size - 1 : interior;
    if (bounded) {
      claim(after.size() <= 2, "reduced frame " + std::to_string(step) + " has more than two edges");
      if (after.size() == 2) {
        const bool shared = (after[0].first == after[1].first || after[0].first == after[1].second ||
                             after[0].second == after[1].first || after[0].second == after[1].second);
        claim(shared, "reduced frame " + std::to_string(step) + " has two disjoint edges");
        if (!forest) {
          const bool at_x = (after[0].first == x || after[0].second == x) && (after[1].first == x || after[1].second == x);
          claim(at_x, "reduced frame " + std::to_string(step) + " has two edges not both at the new vertex");
        }
      }
    }
  }
  return plan;
}

}  // namespace

Storyplan plan_subcubic_outerplanar(const Graph& g) { return plan_subcubic(g, false); }

Storyplan plan_subcubic_forest(const Graph& g) { return plan_subcubic(g, true); }

// ---------------------------------------------------------------------------
// outerplanar, triangle-free

Storyplan plan_outerplanar_forest(const Graph& g) {
  const int n = g.vertex_count();
  const auto embedding = outerplanar_embedding(g);
  if (!embedding) throw Error(ErrorCode::NotOuterplanar, "graph is not outerplanar");
  if (!is_triangle_free(g)) throw Error(ErrorCode::HasTriangle, "graph contains a triangle");

  std::vector<int> comp_of(n, -1);
  const auto comps = connected_components(g);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<std::optional<Dart>> outer_dart(comps.size());
  for (const Dart& d : embedding->outer_darts()) outer_dart[comp_of[d.from]] = d;

  Storyplan plan;
  plan.positions.resize(n);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Vertex first = comps[c].front();
    if (!outer_dart[c]) {
      plan.order.push_back(first);
      continue;
    }
    std::vector<Vertex> walk;
    for (const Dart& d : embedding->face_of(*outer_dart[c])) walk.push_back(d.from);
    std::rotate(walk.begin(), std::find(walk.begin(), walk.end(), first), walk.end());
    std::vector<char> seen(n, 0);
    for (Vertex v : walk) {
      if (!seen[v]) {
        seen[v] = 1;
        plan.order.push_back(v);
      }
    }
  }
  for (std::size_t k = 0; k < plan.order.size(); ++k) {
    const long long t = static_cast<long long>(k);
    plan.positions[plan.order[k]] = Point(t, t * t);
  }
  return plan;
}

Storyplan plan_fixed_drawing(const Graph& g) {
  const auto rs = planarity(g);
  if (!rs) throw Error(ErrorCode::NotPlanar, "graph is not planar");
  Order order(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) order[v] = v;
  return {order, straight_line_draw_planar(g, *rs)};
}

}  // namespace storyplan
