// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. STORYPLAN_SEED (default 0) seeds the random families.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "storyplan/error.hpp"
#include "storyplan/generators.hpp"
#include "storyplan/oracle.hpp"
#include "storyplan/planar_forest.hpp"
#include "storyplan/planners.hpp"
#include "test_support.hpp"

using namespace storyplan;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::uint64_t seed() {
  const char* s = std::getenv("STORYPLAN_SEED");
  return s && *s ? std::stoull(s) : 0;
}

std::size_t max_prime_edges(const Graph& g, const Order& order, int from, int to) {
  std::size_t worst = 0;
  const auto fg = frame_graphs(g, order);
  for (int i = from; i <= to; ++i) worst = std::max(worst, fg[i - 1].second->graph.edge_count());
  return worst;
}

Outcome petersen_forest() {
  const Graph g = petersen();
  const Storyplan plan = plan_subcubic_forest(g);
  const VerifyReport r = verify_storyplan(g, plan, Mode::Forest);
  Outcome o{r.ok && r.max_edges <= 5, "max edges per frame " + std::to_string(r.max_edges)};
  if (!r.ok) o.detail += "; " + r.first_violation.value_or("");
  return o;
}

Outcome random_cubic_outerplanar() {
  std::mt19937_64 rng(seed());
  std::uniform_int_distribution<int> half(3, 50);
  std::size_t worst_edges = 0, worst_prime = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 * half(rng);
    const Graph g = random_cubic(n, rng(), true);
    const Storyplan plan = plan_subcubic_outerplanar(g);
    const VerifyReport r = verify_storyplan(g, plan, Mode::Outerplanar);
    const std::size_t prime = max_prime_edges(g, plan.order, 4, n - 1);
    worst_edges = std::max(worst_edges, r.max_edges);
    worst_prime = std::max(worst_prime, prime);
    if (!r.ok || r.max_edges > 5 || prime > 2) {
      return {false, "graph " + std::to_string(t) + " (n=" + std::to_string(n) +
                         "): " + r.first_violation.value_or("edge bound exceeded")};
    }
  }
  return {true, "100 graphs; max frame edges " + std::to_string(worst_edges) + ", max reduced-frame edges " +
                    std::to_string(worst_prime)};
}

Outcome random_two_trees() {
  std::mt19937_64 rng(seed() + 1);
  std::uniform_int_distribution<int> size(3, 50);
  for (int t = 0; t < 100; ++t) {
    const int n = size(rng);
    const Graph g = random_2tree(n, rng());
    const VerifyReport r = verify_storyplan(g, plan_two_tree_outerplanar(g), Mode::Outerplanar);
    if (!r.ok) return {false, "2-tree " + std::to_string(t) + ": " + r.first_violation.value_or("")};
  }
  return {true, "100 2-trees"};
}

Outcome triangle_free_planar() {
  std::vector<std::pair<std::string, testing::PlaneInstance>> suite;
  suite.push_back({"cube", {platonic(Platonic::Cube), {}}});
  suite.push_back({"dodecahedron", {platonic(Platonic::Dodecahedron), {}}});
  for (int w = 2; w <= 6; ++w) {
    for (int h = w; h <= 6; ++h) suite.push_back({"grid" + std::to_string(w) + "x" + std::to_string(h), {grid(w, h), {}}});
  }
  int k = 0;
  for (auto& inst : testing::structured_triangle_free_instances()) suite.push_back({"structured" + std::to_string(k++), inst});
  std::mt19937_64 rng(seed() + 2);
  for (int t = 0; t < 20; ++t) {
    suite.push_back({"random" + std::to_string(t), testing::random_plane_drawing(24, 600, true, rng)});
  }
  int iterations = 0, fallback = 0;
  for (const auto& [name, inst] : suite) {
    PlanarForestStats stats;
    try {
      std::optional<PositionMap> pos;
      if (!inst.positions.empty()) pos = inst.positions;
      const Storyplan plan = plan_planar_forest(inst.graph, pos, &stats);
      const VerifyReport r = verify_storyplan(inst.graph, plan, Mode::Forest);
      if (!r.ok) return {false, name + ": " + r.first_violation.value_or("")};
    } catch (const Error& e) {
      return {false, name + ": " + e.what()};
    }
    iterations += stats.iterations;
    fallback += stats.fallback_picks;
  }
  return {true, std::to_string(suite.size()) + " instances, " + std::to_string(iterations) +
                    " iterations with invariants checked, " + std::to_string(fallback) + " fallback picks"};
}

Outcome separations() {
  struct Case {
    std::string name;
    Graph g;
    Mode cls;
    bool expected;
  };
  const Case cases[] = {
      {"K4 outerplanar", complete(4), Mode::Outerplanar, false},
      {"octahedron outerplanar", platonic(Platonic::Octahedron), Mode::Outerplanar, false},
      {"blown_cycle(5,2) forest", blown_cycle(5, 2), Mode::Forest, false},
      {"blown_cycle(5,2) outerplanar", blown_cycle(5, 2), Mode::Outerplanar, true},
      {"cube forest", platonic(Platonic::Cube), Mode::Forest, true},
  };
  std::ostringstream detail;
  bool pass = true;
  for (const Case& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = decide_storyplan(c.g, c.cls);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool sound = !v.feasible || frames_in_class(c.g, *v.witness, c.cls);
    const bool ok = !v.budget_exhausted && v.feasible == c.expected && sound && secs < 10.0;
    pass = pass && ok;
    detail << c.name << "=" << (v.feasible ? "feasible" : "infeasible") << (ok ? "" : "(WRONG)") << ' ';
  }
  return {pass, detail.str()};
}

Outcome bipartite_visibility() {
  std::ostringstream detail;
  for (const Graph& g : {complete_bipartite(3, 3), complete_bipartite(3, 4)}) {
    std::uint64_t bad = 0;
    const std::uint64_t orders = for_each_feasible_order(g, Mode::Planar, [&](const Order& order) {
      const SideVisibility s = check_bipartite_visibility(g, order);
      if (s.a_fully_visible == s.b_fully_visible) ++bad;
    });
    detail << "n=" << g.vertex_count() << ": " << orders << " orders ";
    if (bad > 0 || orders == 0) return {false, detail.str() + std::to_string(bad) + " violate"};
  }
  return {true, detail.str() + "all with exactly one side fully visible"};
}

Outcome properties() {
  std::mt19937_64 rng(seed() + 3);
  const Mode modes[] = {Mode::Forest, Mode::Outerplanar, Mode::Planar};
  auto decide = [](const Graph& g, Mode cls) { return decide_storyplan(g, cls).feasible; };

  // inherited by induced subgraphs
  for (Mode cls : modes) {
    for (int t = 0; t < 200; ++t) {
      const int n = 3 + static_cast<int>(rng() % 6);
      const Graph g = testing::random_graph(n, 0.25 + 0.05 * static_cast<double>(rng() % 10), rng);
      if (!decide(g, cls)) continue;
      std::vector<Vertex> vs;
      for (Vertex v = 0; v < n; ++v)
        if (rng() % 3 != 0) vs.push_back(v);
      if (!decide(g.induced(vs), cls)) return {false, "induced subgraph of a feasible graph is infeasible"};
    }
  }
  // class monotonicity, with and without symmetry reduction
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = testing::random_graph(n, 0.3 + 0.05 * static_cast<double>(rng() % 10), rng);
    bool verdict[3];
    for (int c = 0; c < 3; ++c) {
      DecideOptions plain;
      plain.symmetry = false;
      verdict[c] = decide(g, modes[c]);
      if (decide_storyplan(g, modes[c], plain).feasible != verdict[c]) return {false, "symmetry changed a verdict"};
    }
    if ((verdict[0] && !verdict[1]) || (verdict[1] && !verdict[2])) return {false, "class monotonicity violated"};
  }
  // verifier mode implications on random drawn plans
  for (int t = 0; t < 300; ++t) {
    const auto inst = testing::random_plane_drawing(3 + static_cast<int>(rng() % 8), 40, false, rng);
    Order order(inst.graph.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Storyplan plan{order, inst.positions};
    const bool f = verify_storyplan(inst.graph, plan, Mode::Forest).ok;
    const bool o = verify_storyplan(inst.graph, plan, Mode::Outerplanar).ok;
    const bool p = verify_storyplan(inst.graph, plan, Mode::Planar).ok;
    if ((f && !o) || (o && !p)) return {false, "verifier mode implication violated"};
  }
  // lifespans are contiguous and cover every edge
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = testing::random_graph(n, 0.35, rng);
    Order order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> tau(n);
    for (int i = 0; i < n; ++i) tau[order[i]] = i + 1;
    const auto fs = frames(g, order);
    for (Vertex v = 0; v < n; ++v) {
      int last = tau[v];
      for (Vertex w : g.neighbors(v)) last = std::max(last, tau[w]);
      for (const Frame& f : fs) {
        const bool shown = std::binary_search(f.visible.begin(), f.visible.end(), v);
        if (shown != (tau[v] <= f.step && f.step <= last)) return {false, "lifespan is not the expected interval"};
      }
    }
    for (auto [u, v] : g.edges()) {
      const bool covered = std::any_of(fs.begin(), fs.end(), [&](const Frame& f) {
        return std::binary_search(f.visible.begin(), f.visible.end(), u) &&
               std::binary_search(f.visible.begin(), f.visible.end(), v);
      });
      if (!covered) return {false, "an edge never appears"};
    }
  }
  return {true, "subgraph inheritance, class monotonicity, mode implications, 1000 lifespan checks"};
}

Outcome blown_cycle_planar() {
  DecideOptions opts;
  opts.max_n = 15;
  opts.node_budget = 1'000'000'000;
  const Graph g = blown_cycle(5, 3);
  const Verdict v = decide_storyplan(g, Mode::Planar, opts);
  if (v.budget_exhausted) return {true, "budget-exhausted after " + std::to_string(v.nodes_explored) + " nodes"};
  return {!v.feasible, std::string(v.feasible ? "feasible (WRONG)" : "infeasible") + " after " +
                           std::to_string(v.nodes_explored) + " nodes"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "Petersen forest plan, <= 5 edges per frame", 1, petersen_forest},
      {2, "random cubic graphs, outerplanar plans", 30, random_cubic_outerplanar},
      {3, "random 2-trees, outerplanar plans", 30, random_two_trees},
      {4, "triangle-free planar suite, forest plans", 60, triangle_free_planar},
      {5, "exact separations by exhaustive search", 50, separations},
      {6, "complete bipartite side visibility", 60, bipartite_visibility},
      {7, "property suite", 600, properties},
      {8, "blown_cycle(5,3) planar search", 600, blown_cycle_planar},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    failures += !o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
              << std::fixed << std::setprecision(2) << secs << " s)  " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
