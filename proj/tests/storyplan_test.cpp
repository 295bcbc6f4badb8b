#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "storyplan/error.hpp"
#include "storyplan/generators.hpp"
#include "storyplan/storyplan.hpp"
#include "test_support.hpp"

using namespace storyplan;

namespace {

Order random_order(int n, std::mt19937_64& rng) {
  Order o(n);
  std::iota(o.begin(), o.end(), 0);
  std::shuffle(o.begin(), o.end(), rng);
  return o;
}

PositionMap random_positions(int n, int range, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(0, range);
  PositionMap pos(n);
  for (auto& p : pos) p = Point(c(rng), c(rng));
  return pos;
}

// Visible sets straight from the definition: v is visible at step i iff
// tau(v) <= i and some u in N[v] has tau(u) >= i.
std::vector<std::vector<Vertex>> visible_by_definition(const Graph& g, const Order& order) {
  const int n = g.vertex_count();
  std::vector<int> tau(n);
  for (int i = 0; i < n; ++i) tau[order[i]] = i + 1;
  std::vector<std::vector<Vertex>> out(n);
  for (int i = 1; i <= n; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      bool alive = tau[v] >= i;
      for (Vertex u : g.neighbors(v)) alive |= tau[u] >= i;
      if (tau[v] <= i && alive) out[i - 1].push_back(v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("lifespans examples") {
  const Graph p3 = path(3);
  CHECK(lifespans(p3, Order{0, 1, 2}) == std::vector<Lifespan>{{1, 2}, {2, 3}, {3, 3}});
  const Graph lone = Graph::build(3, {{0, 1}});
  CHECK(lifespans(lone, Order{0, 2, 1})[2] == Lifespan{2, 2});
  const Graph k2 = complete(2);
  CHECK(lifespans(k2, Order{0, 1}) == std::vector<Lifespan>{{1, 2}, {2, 2}});
}

TEST_CASE("lifespans reject orders that are not bijections") {
  for (const Order& bad : {Order{0, 1}, Order{0, 1, 1}, Order{0, 1, 3}, Order{0, 1, 2, 0}}) {
    try {
      lifespans(path(3), bad);
      FAIL("expected NotBijective");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotBijective);
    }
  }
}

TEST_CASE("frame_graphs examples") {
  const auto fg = frame_graphs(path(3), Order{0, 1, 2});
  REQUIRE(fg.size() == 3);
  CHECK(fg[0].first.vertices == std::vector<Vertex>{0});
  CHECK(fg[1].first.vertices == std::vector<Vertex>{0, 1});
  CHECK(fg[1].first.graph.edge_count() == 1);
  CHECK(fg[2].first.vertices == std::vector<Vertex>{1, 2});
  CHECK(fg[2].first.graph.edge_count() == 1);
  CHECK(fg[0].second->vertices == std::vector<Vertex>{0});
  CHECK(fg[1].second->vertices == std::vector<Vertex>{1});
  CHECK_FALSE(fg[2].second.has_value());

  // C6 in cyclic order: the last frame is the path v5 - v6 - v1
  const auto c6 = frame_graphs(cycle(6), Order{0, 1, 2, 3, 4, 5});
  CHECK(c6[5].first.vertices == std::vector<Vertex>{0, 4, 5});
  CHECK(c6[5].first.graph.edge_count() == 2);
  CHECK(is_forest(c6[5].first.graph));

  // K_{3,3}, side A first: step 4 shows all of A plus the first B vertex
  const auto k33 = frame_graphs(complete_bipartite(3, 3), Order{0, 1, 2, 3, 4, 5});
  CHECK(k33[3].first.vertices == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("frames: contiguity, coverage and reduced frames on random (graph, order) pairs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = testing::random_graph(n, 0.15 + 0.1 * (trial % 6), rng);
    const Order order = random_order(n, rng);
    const auto fs = frames(g, order);
    const auto expected = visible_by_definition(g, order);
    const auto life = lifespans(g, order);
    REQUIRE(fs.size() == static_cast<std::size_t>(n));
    std::vector<std::vector<int>> steps_of(n);
    std::set<Edge> seen_edges;
    for (int i = 0; i < n; ++i) {
      CHECK(fs[i].visible == expected[i]);
      CHECK(fs[i].new_vertex == order[i]);
      for (Vertex v : fs[i].visible) steps_of[v].push_back(i + 1);
      for (Vertex a : fs[i].visible)
        for (Vertex b : fs[i].visible)
          if (a < b && g.has_edge(a, b)) seen_edges.insert({a, b});
      if (i + 1 < n) {
        std::vector<Vertex> both;
        std::set_intersection(fs[i].visible.begin(), fs[i].visible.end(), fs[i + 1].visible.begin(),
                              fs[i + 1].visible.end(), std::back_inserter(both));
        CHECK(*fs[i].prime == both);
      } else {
        CHECK_FALSE(fs[i].prime.has_value());
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      // one contiguous interval, equal to the lifespan
      REQUIRE_FALSE(steps_of[v].empty());
      CHECK(steps_of[v].front() == life[v].appear);
      CHECK(steps_of[v].back() == life[v].disappear_after);
      CHECK(static_cast<int>(steps_of[v].size()) == life[v].disappear_after - life[v].appear + 1);
    }
    CHECK(seen_edges.size() == g.edge_count());
  }
}

TEST_CASE("verify_storyplan: K3 cannot be a forest storyplan") {
  const Graph k3 = complete(3);
  const Storyplan plan{{0, 1, 2}, {Point(0, 0), Point(2, 0), Point(1, 2)}};
  const VerifyReport forest = verify_storyplan(k3, plan, Mode::Forest);
  CHECK_FALSE(forest.ok);
  REQUIRE(forest.per_frame.size() == 3);
  CHECK(forest.per_frame[0].class_ok);
  CHECK(forest.per_frame[1].class_ok);
  CHECK_FALSE(forest.per_frame[2].class_ok);
  REQUIRE(forest.first_violation.has_value());
  CHECK(forest.first_violation->find("frame 3 contains a cycle") != std::string::npos);
  CHECK(verify_storyplan(k3, plan, Mode::Outerplanar).ok);
  CHECK(verify_storyplan(k3, plan, Mode::Planar).ok);
}

TEST_CASE("verify_storyplan reports bad inputs instead of throwing") {
  const Graph p3 = path(3);
  CHECK_FALSE(verify_storyplan(p3, {{0, 1}, {Point(0, 0), Point(1, 0), Point(2, 0)}}, Mode::Planar).ok);
  CHECK_FALSE(verify_storyplan(p3, {{0, 1, 2}, {Point(0, 0), Point(1, 0)}}, Mode::Planar).ok);
  PositionMap missing{Point(0, 0), std::nullopt, Point(1, 1)};
  CHECK_FALSE(verify_storyplan(p3, {{0, 1, 2}, missing}, Mode::Planar).ok);
}

TEST_CASE("positions may be reused by vertices that never coexist") {
  // path 0-1-2-3 in order: 0 disappears after step 2, 3 appears at step 4
  const Graph p4 = path(4);
  const Storyplan plan{{0, 1, 2, 3}, {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 0)}};
  CHECK(verify_storyplan(p4, plan, Mode::Forest).ok);
  // coexisting vertices may not share a position
  const Storyplan clash{{0, 1, 2, 3}, {Point(0, 0), Point(1, 0), Point(1, 0), Point(2, 2)}};
  CHECK_FALSE(verify_storyplan(p4, clash, Mode::Planar).ok);
}

TEST_CASE("verifier mode implications on random plans") {
  std::mt19937_64 rng(43);
  int forest_ok = 0, outer_ok = 0, planar_ok = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 9;
    const Graph g = testing::random_graph(n, 0.2 + 0.05 * (trial % 5), rng);
    const Storyplan plan{random_order(n, rng), random_positions(n, 6, rng)};
    const bool f = verify_storyplan(g, plan, Mode::Forest).ok;
    const bool o = verify_storyplan(g, plan, Mode::Outerplanar).ok;
    const bool p = verify_storyplan(g, plan, Mode::Planar).ok;
    CHECK((!f || o));
    CHECK((!o || p));
    forest_ok += f;
    outer_ok += o;
    planar_ok += p;
  }
  // the sample is not degenerate
  CHECK(forest_ok > 0);
  CHECK(planar_ok > outer_ok);
}

TEST_CASE("mode names round-trip") {
  for (Mode m : {Mode::Planar, Mode::Outerplanar, Mode::Forest}) CHECK(parse_mode(to_string(m)) == m);
  CHECK_THROWS_AS(parse_mode("tree"), Error);
}
