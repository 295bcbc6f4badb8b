#pragma once

#include <cstdint>
#include <string_view>

#include "storyplan/graph.hpp"

namespace storyplan {

enum class Platonic { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

Graph petersen();
Graph platonic(Platonic solid);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph grid(int width, int height);

/// Cyclic chain of `parts` independent sets of `size` vertices each, with
/// complete bipartite joins between consecutive sets. Part j holds vertices
/// j*size .. j*size+size-1.
Graph blown_cycle(int parts, int size);

/// Connected simple cubic graph from the configuration model; rejection
/// sampling until simple and connected. Deterministic per seed.
Graph random_cubic(int n, std::uint64_t seed, bool reject_k4 = true);

/// Random 2-tree: triangle plus repeated stacking on a uniformly chosen edge,
/// with vertex labels shuffled. Deterministic per seed.
Graph random_2tree(int n, std::uint64_t seed);

/// Parses descriptors such as "petersen", "platonic:octa",
/// "complete-bipartite:3,3", "blown-cycle:5,2", "grid:4,4",
/// "random-cubic:20", "random-2tree:30", "complete:5", "cycle:6", "path:4".
/// Random families take an optional trailing seed parameter that overrides
/// `seed`. Throws Error{BadParams}.
Graph generate_named(std::string_view descriptor, std::uint64_t seed = 0);

}  // namespace storyplan
