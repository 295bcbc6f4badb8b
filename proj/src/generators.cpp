#include "storyplan/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "storyplan/error.hpp"

namespace storyplan {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

}  // namespace

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::build(10, edges);
}

Graph platonic(Platonic solid) {
  std::vector<Edge> edges;
  switch (solid) {
    case Platonic::Tetrahedron:
      return complete(4);
    case Platonic::Cube:
      for (int v = 0; v < 8; ++v) {
        for (int bit : {1, 2, 4}) {
          if ((v & bit) == 0) edges.push_back({v, v | bit});
        }
      }
      return Graph::build(8, edges);
    case Platonic::Octahedron:
      // K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5).
      for (int u = 0; u < 6; ++u) {
        for (int v = u + 1; v < 6; ++v) {
          if (u / 2 != v / 2) edges.push_back({u, v});
        }
      }
      return Graph::build(6, edges);
    case Platonic::Dodecahedron:
      // Layers: a = 0..4, b = 5..14 (10-cycle), c = 15..19.
      for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));
        edges.push_back(make_edge(i, 5 + 2 * i));
        edges.push_back(make_edge(5 + 2 * i + 1, 15 + i));
        edges.push_back(make_edge(15 + i, 15 + (i + 1) % 5));
      }
      for (int j = 0; j < 10; ++j) edges.push_back(make_edge(5 + j, 5 + (j + 1) % 10));
      return Graph::build(20, edges);
    case Platonic::Icosahedron:
      // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
      for (int i = 0; i < 5; ++i) {
        const int up = 1 + i, up_next = 1 + (i + 1) % 5;
        const int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
        edges.push_back(make_edge(0, up));
        edges.push_back(make_edge(up, up_next));
        edges.push_back(make_edge(lo, lo_next));
        edges.push_back(make_edge(up, lo));
        edges.push_back(make_edge(up, lo_next));
        edges.push_back(make_edge(11, lo));
      }
      return Graph::build(12, edges);
  }
  throw Error(ErrorCode::BadParams, "unknown platonic solid");
}

Graph complete(int n) {
  require(n >= 0, "complete(n) needs n >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::build(n, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 0 && b >= 0, "complete_bipartite needs non-negative sides");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Graph::build(a + b, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph::build(n, edges);
}

Graph path(int n) {
  require(n >= 1, "path(n) needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::build(n, edges);
}

Graph grid(int width, int height) {
  require(width >= 1 && height >= 1, "grid needs positive dimensions");
  std::vector<Edge> edges;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const int v = y * width + x;
      if (x + 1 < width) edges.push_back({v, v + 1});
      if (y + 1 < height) edges.push_back({v, v + width});
    }
  }
  return Graph::build(width * height, edges);
}

Graph blown_cycle(int parts, int size) {
  require(parts >= 3, "blown_cycle needs at least 3 parts");
  require(size >= 1, "blown_cycle needs part size >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j < parts; ++j) {
    const int next = (j + 1) % parts;
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b) edges.push_back(make_edge(j * size + a, next * size + b));
    }
  }
  return Graph::build(parts * size, edges);
}

Graph random_cubic(int n, std::uint64_t seed, bool reject_k4) {
  require(n >= 4 && n % 2 == 0, "random_cubic needs even n >= 4");
  require(!(reject_k4 && n == 4), "the only cubic graph on 4 vertices is K4");
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      if (points[i] == points[i + 1]) simple = false;
      else edges.push_back(make_edge(points[i], points[i + 1]));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g = Graph::build(n, edges);
    if (connected_components(g).size() != 1) continue;
    return g;
  }
}

Graph random_2tree(int n, std::uint64_t seed) {
  require(n >= 3, "random_2tree needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const Edge base = edges[pick(rng)];
    edges.push_back({base.first, v});
    edges.push_back({base.second, v});
  }
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  for (auto& e : edges) e = make_edge(label[e.first], label[e.second]);
  return Graph::build(n, edges);
}

namespace {

std::vector<std::string> split_params(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.emplace_back(text.substr(start, end - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

long long to_int(const std::string& s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::BadParams, "not an integer: '" + s + "'");
  }
  return value;
}

}  // namespace

Graph generate_named(std::string_view descriptor, std::uint64_t seed) {
  std::string name(descriptor.substr(0, descriptor.find(':')));
  std::replace(name.begin(), name.end(), '_', '-');
  std::vector<std::string> params;
  if (const auto colon = descriptor.find(':'); colon != std::string_view::npos) {
    params = split_params(descriptor.substr(colon + 1));
  }
  auto arity = [&](std::size_t lo, std::size_t hi) {
    require(params.size() >= lo && params.size() <= hi,
            "family '" + name + "' takes " + std::to_string(lo) + ".." + std::to_string(hi) + " parameters");
  };
  auto param = [&](std::size_t i) { return static_cast<int>(to_int(params[i])); };
  auto seed_param = [&](std::size_t i) {
    return params.size() > i ? static_cast<std::uint64_t>(to_int(params[i])) : seed;
  };

  if (name == "petersen") {
    arity(0, 0);
    return petersen();
  }
  if (name == "platonic") {
    arity(1, 1);
    const std::string& s = params[0];
    if (s == "tetra" || s == "tetrahedron") return platonic(Platonic::Tetrahedron);
    if (s == "cube") return platonic(Platonic::Cube);
    if (s == "octa" || s == "octahedron") return platonic(Platonic::Octahedron);
    if (s == "dodeca" || s == "dodecahedron") return platonic(Platonic::Dodecahedron);
    if (s == "icosa" || s == "icosahedron") return platonic(Platonic::Icosahedron);
    throw Error(ErrorCode::BadParams, "unknown platonic solid '" + s + "'");
  }
  if (name == "complete-bipartite") {
    arity(2, 2);
    return complete_bipartite(param(0), param(1));
  }
  if (name == "blown-cycle") {
    arity(2, 2);
    return blown_cycle(param(0), param(1));
  }
  if (name == "grid") {
    arity(2, 2);
    return grid(param(0), param(1));
  }
  if (name == "random-cubic") {
    arity(1, 2);
    return random_cubic(param(0), seed_param(1));
  }
  if (name == "random-2tree") {
    arity(1, 2);
    return random_2tree(param(0), seed_param(1));
  }
  if (name == "complete") {
    arity(1, 1);
    return complete(param(0));
  }
  if (name == "cycle") {
    arity(1, 1);
    return cycle(param(0));
  }
  if (name == "path") {
    arity(1, 1);
    return path(param(0));
  }
  throw Error(ErrorCode::BadParams, "unknown graph family '" + name + "'");
}

}  // namespace storyplan
