#include "storyplan/storyplan.hpp"

#include <algorithm>

#include "storyplan/error.hpp"

namespace storyplan {

std::vector<int> step_of(int n, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::NotBijective,
                "order has " + std::to_string(order.size()) + " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<int> tau(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= n) throw Error(ErrorCode::NotBijective, "order lists unknown vertex " + std::to_string(v));
    if (tau[v] != 0) throw Error(ErrorCode::NotBijective, "order lists vertex " + std::to_string(v) + " twice");
    tau[v] = static_cast<int>(i) + 1;
  }
  return tau;
}

std::vector<Lifespan> lifespans(const Graph& g, std::span<const Vertex> order) {
  const auto tau = step_of(g.vertex_count(), order);
  std::vector<Lifespan> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int last = tau[v];
    for (Vertex u : g.neighbors(v)) last = std::max(last, tau[u]);
    out[v] = {tau[v], last};
  }
  return out;
}

std::vector<Frame> frames(const Graph& g, std::span<const Vertex> order) {
  const int n = g.vertex_count();
  const auto life = lifespans(g, order);
  std::vector<std::vector<Vertex>> leaving(n + 2);
  for (Vertex v = 0; v < n; ++v) leaving[life[v].disappear_after].push_back(v);

  std::vector<Frame> out;
  std::vector<char> visible(n, 0);
  std::vector<Vertex> current;
  for (int i = 1; i <= n; ++i) {
    const Vertex x = order[i - 1];
    visible[x] = 1;
    current.insert(std::upper_bound(current.begin(), current.end(), x), x);
    Frame f;
    f.step = i;
    f.visible = current;
    f.new_vertex = x;
    for (Vertex v : leaving[i]) visible[v] = 0;
    std::erase_if(current, [&](Vertex v) { return !visible[v]; });
    if (i < n) f.prime = current;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::pair<FrameGraph, std::optional<FrameGraph>>> frame_graphs(const Graph& g,
                                                                          std::span<const Vertex> order) {
  std::vector<std::pair<FrameGraph, std::optional<FrameGraph>>> out;
  for (const Frame& f : frames(g, order)) {
    FrameGraph main{f.visible, g.induced(f.visible)};
    std::optional<FrameGraph> prime;
    if (f.prime) prime = FrameGraph{*f.prime, g.induced(*f.prime)};
    out.emplace_back(std::move(main), std::move(prime));
  }
  return out;
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Planar:
      return "planar";
    case Mode::Outerplanar:
      return "outerplanar";
    case Mode::Forest:
      return "forest";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "planar") return Mode::Planar;
  if (s == "outerplanar") return Mode::Outerplanar;
  if (s == "forest") return Mode::Forest;
  throw Error(ErrorCode::ParseError, "unknown mode '" + s + "'");
}

VerifyReport verify_storyplan(const Graph& g, const Storyplan& plan, Mode mode) {
  VerifyReport report;
  auto violation = [&](std::string what) {
    report.ok = false;
    if (!report.first_violation) report.first_violation = std::move(what);
  };
  const int n = g.vertex_count();
  std::vector<Frame> fs;
  try {
    fs = frames(g, plan.order);
  } catch (const Error& e) {
    violation(e.what());
    return report;
  }
  if (static_cast<int>(plan.positions.size()) < n) {
    violation("positions cover " + std::to_string(plan.positions.size()) + " of " + std::to_string(n) + " vertices");
    return report;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!plan.positions[v]) {
      violation("vertex " + std::to_string(v) + " has no position");
      return report;
    }
  }

  std::size_t covered = 0;
  const auto life = lifespans(g, plan.order);
  for (auto [u, v] : g.edges()) {
    // both endpoints share a step iff their lifespans intersect
    const int lo = std::max(life[u].appear, life[v].appear);
    const int hi = std::min(life[u].disappear_after, life[v].disappear_after);
    if (lo <= hi) ++covered;
  }
  const std::span<const std::optional<Point>> pos(plan.positions);

  for (const Frame& f : fs) {
    FrameReport fr;
    fr.step = f.step;
    const Drawing d = induced_drawing(g, pos, f.visible);
    fr.edges = d.edges.size();
    report.max_edges = std::max(report.max_edges, fr.edges);
    if (auto why = plane_violation(d)) {
      fr.plane_ok = false;
      violation("frame " + std::to_string(f.step) + ": " + *why);
    } else if (f.prime) {
      if (auto why_prime = plane_violation(induced_drawing(g, pos, *f.prime))) {
        fr.plane_ok = false;
        violation("frame " + std::to_string(f.step) + " (reduced): " + *why_prime);
      }
    }
    switch (mode) {
      case Mode::Planar:
        break;
      case Mode::Outerplanar:
        if (fr.plane_ok) {
          const auto inner = enclosed_vertices(d);
          if (!inner.empty()) {
            fr.class_ok = false;
            violation("frame " + std::to_string(f.step) + ": vertex " + std::to_string(inner.front()) +
                      " is not on the outer face");
          }
        }
        break;
      case Mode::Forest:
        if (!induces_forest(g, f.visible)) {
          fr.class_ok = false;
          violation("frame " + std::to_string(f.step) + " contains a cycle");
        }
        break;
    }
    report.per_frame.push_back(fr);
  }
  if (covered != g.edge_count()) {
    violation(std::to_string(g.edge_count() - covered) + " edges never appear in a frame");
  }
  return report;
}

}  // namespace storyplan
