#include "storyplan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "storyplan/embedding.hpp"
#include "storyplan/error.hpp"

namespace storyplan {

bool graph_in_class(const Graph& g, Mode cls) {
  switch (cls) {
    case Mode::Forest:
      return is_forest(g);
    case Mode::Outerplanar:
      return is_outerplanar(g);
    case Mode::Planar:
      return is_planar(g);
  }
  return false;
}

bool frames_in_class(const Graph& g, const Order& order, Mode cls) {
  for (const Frame& f : frames(g, order)) {
    if (!graph_in_class(g.induced(f.visible), cls)) return false;
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

class Search {
 public:
  Search(const Graph& g, Mode cls, std::uint64_t budget, std::atomic<std::uint64_t>* nodes,
         const std::atomic<bool>* stop)
      : g_(g), cls_(cls), budget_(budget), nodes_(nodes), stop_(stop) {
    const int n = g.vertex_count();
    nbr_.assign(n, 0);
    for (auto [u, v] : g.edges()) {
      nbr_[u] |= bit(v);
      nbr_[v] |= bit(u);
    }
  }

  // Frame shown when x is appended to the placed set.
  Mask frame(Mask placed, Vertex x) const {
    Mask f = bit(x);
    for (Mask rest = placed; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      if ((nbr_[v] & ~placed) != 0) f |= bit(v);
    }
    return f;
  }

  bool frame_ok(Mask f) {
    if (auto it = frame_memo_.find(f); it != frame_memo_.end()) return it->second;
    std::vector<Vertex> vs;
    std::size_t edges = 0;
    for (Mask rest = f; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      vs.push_back(v);
      edges += std::popcount(nbr_[v] & f);
    }
    edges /= 2;
    const long k = static_cast<long>(vs.size());
    bool ok;
    if (cls_ == Mode::Forest && static_cast<long>(edges) > k - 1 && k > 0) {
      ok = false;
    } else if (cls_ == Mode::Outerplanar && k >= 2 && static_cast<long>(edges) > 2 * k - 3) {
      ok = false;
    } else if (cls_ == Mode::Planar && k >= 3 && static_cast<long>(edges) > 3 * k - 6) {
      ok = false;
    } else {
      ok = graph_in_class(g_.induced(vs), cls_);
    }
    frame_memo_.emplace(f, ok);
    return ok;
  }

  // Depth-first extension of the prefix; dead placed sets are remembered.
  bool extend(Mask placed, Order& prefix) {
    const int n = g_.vertex_count();
    if (static_cast<int>(prefix.size()) == n) return true;
    if (dead_.contains(placed)) return false;
    for (Vertex x = 0; x < n; ++x) {
      if (placed & bit(x)) continue;
      if (exhausted_ || (stop_ && stop_->load(std::memory_order_relaxed))) return false;
      if (nodes_->fetch_add(1, std::memory_order_relaxed) >= budget_) {
        exhausted_ = true;
        return false;
      }
      if (!frame_ok(frame(placed, x))) continue;
      prefix.push_back(x);
      if (extend(placed | bit(x), prefix)) return true;
      prefix.pop_back();
    }
    if (!exhausted_ && !(stop_ && stop_->load())) dead_.insert(placed);
    return false;
  }

  void enumerate(Mask placed, Order& prefix, const std::function<void(const Order&)>& visit, std::uint64_t& count) {
    const int n = g_.vertex_count();
    if (static_cast<int>(prefix.size()) == n) {
      visit(prefix);
      ++count;
      return;
    }
    if (dead_.contains(placed)) return;
    const std::uint64_t before = count;
    for (Vertex x = 0; x < n; ++x) {
      if ((placed & bit(x)) || !frame_ok(frame(placed, x))) continue;
      prefix.push_back(x);
      enumerate(placed | bit(x), prefix, visit, count);
      prefix.pop_back();
    }
    if (count == before) dead_.insert(placed);
  }

  bool exhausted() const { return exhausted_; }

 private:
  const Graph& g_;
  Mode cls_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>* nodes_;
  const std::atomic<bool>* stop_;
  std::vector<Mask> nbr_;
  std::unordered_set<Mask> dead_;
  std::unordered_map<Mask, bool> frame_memo_;
  bool exhausted_ = false;
};

// Backtracking search for an automorphism extending a partial map.
bool extend_automorphism(const Graph& g, std::vector<Vertex>& image, std::vector<char>& used, Vertex next) {
  const int n = g.vertex_count();
  while (next < n && image[next] >= 0) ++next;
  if (next == n) return true;
  for (Vertex w = 0; w < n; ++w) {
    if (used[w] || g.degree(w) != g.degree(next)) continue;
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      if (image[u] >= 0 && g.has_edge(u, next) != g.has_edge(image[u], w)) ok = false;
    }
    if (!ok) continue;
    image[next] = w;
    used[w] = 1;
    if (extend_automorphism(g, image, used, next + 1)) return true;
    image[next] = -1;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> orbit(n, -1);
  std::vector<std::vector<Vertex>> result;
  for (Vertex v = 0; v < n; ++v) {
    if (orbit[v] >= 0) continue;
    orbit[v] = static_cast<int>(result.size());
    result.push_back({v});
    for (Vertex w = v + 1; w < n; ++w) {
      if (orbit[w] >= 0 || g.degree(w) != g.degree(v)) continue;
      std::vector<Vertex> image(n, -1);
      std::vector<char> used(n, 0);
      image[v] = w;
      used[w] = 1;
      if (extend_automorphism(g, image, used, 0)) {
        orbit[w] = orbit[v];
        result.back().push_back(w);
      }
    }
  }
  return result;
}

Verdict decide_storyplan(const Graph& g, Mode cls, const DecideOptions& opts) {
  const int n = g.vertex_count();
  if (n > opts.max_n || n > 64) {
    throw Error(ErrorCode::TooLarge, "graph has " + std::to_string(n) + " vertices; limit is " +
                                         std::to_string(std::min(opts.max_n, 64)));
  }
  Verdict verdict;
  if (n == 0) {
    verdict.feasible = true;
    verdict.witness = Order{};
    return verdict;
  }

  std::vector<Vertex> firsts;
  if (opts.symmetry) {
    for (const auto& orbit : automorphism_orbits(g)) firsts.push_back(orbit.front());
  } else {
    for (Vertex v = 0; v < n; ++v) firsts.push_back(v);
  }

  // Branches rooted at distinct first vertices are independent.
  std::atomic<bool> found{false};
  std::atomic<std::size_t> next_branch{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::mutex result_mutex;
  std::optional<Order> best;
  std::size_t best_branch = firsts.size();

  auto worker = [&] {
    Search search(g, cls, opts.node_budget, &nodes, opts.jobs > 1 ? &found : nullptr);
    for (;;) {
      const std::size_t b = next_branch.fetch_add(1);
      if (b >= firsts.size() || found.load() || exhausted.load()) return;
      Order prefix{firsts[b]};
      nodes.fetch_add(1);
      const bool ok = search.extend(bit(firsts[b]), prefix);
      if (search.exhausted()) exhausted = true;
      if (ok) {
        std::lock_guard lock(result_mutex);
        if (b < best_branch) {
          best_branch = b;
          best = prefix;
        }
        found = true;
      }
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  verdict.nodes_explored = nodes.load();
  if (best) {
    verdict.feasible = true;
    verdict.witness = std::move(best);
  } else if (exhausted.load()) {
    verdict.budget_exhausted = true;
  }
  return verdict;
}

std::uint64_t for_each_feasible_order(const Graph& g, Mode cls, const std::function<void(const Order&)>& visit) {
  if (g.vertex_count() > 64) throw Error(ErrorCode::TooLarge, "at most 64 vertices");
  std::atomic<std::uint64_t> nodes{0};
  Search search(g, cls, UINT64_MAX, &nodes, nullptr);
  Order prefix;
  std::uint64_t count = 0;
  search.enumerate(0, prefix, visit, count);
  return count;
}

SideVisibility check_bipartite_visibility(const Graph& g, const Order& order) {
  const int n = g.vertex_count();
  const std::vector<int> colour = bipartition(g);
  if (colour.empty()) throw Error(ErrorCode::NotBipartite, "graph is not bipartite");
  SideVisibility result;
  for (Vertex v = 0; v < n; ++v) (colour[v] == colour[0] ? result.side_a : result.side_b).push_back(v);
  if (result.side_b.size() < result.side_a.size()) std::swap(result.side_a, result.side_b);
  if (g.edge_count() != result.side_a.size() * result.side_b.size()) {
    throw Error(ErrorCode::NotBipartite, "graph is not complete bipartite");
  }
  for (const Frame& f : frames(g, order)) {
    if (!is_planar(g.induced(f.visible))) {
      throw Error(ErrorCode::FramesNotPlanar, "frame " + std::to_string(f.step) + " is not planar");
    }
    auto covers = [&](const std::vector<Vertex>& side) {
      return std::includes(f.visible.begin(), f.visible.end(), side.begin(), side.end());
    };
    if (!result.a_step && covers(result.side_a)) result.a_step = f.step;
    if (!result.b_step && covers(result.side_b)) result.b_step = f.step;
  }
  result.a_fully_visible = result.a_step.has_value();
  result.b_fully_visible = result.b_step.has_value();
  return result;
}

}  // namespace storyplan
