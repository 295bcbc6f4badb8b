#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "storyplan/graph.hpp"
#include "storyplan/storyplan.hpp"

namespace storyplan {

/// Text format: "n m" on the first line, then m lines "u v".
/// Throws Error{ParseError} (and the Graph::build errors for bad edges).
Graph parse_graph(std::istream& in);
/// Edges in lexicographic order.
void write_graph(std::ostream& out, const Graph& g);

/// Throws Error{IoError} if the file cannot be opened.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

struct PlanFile {
  Storyplan plan;
  std::optional<Mode> mode;
  int n = 0;
};

/// {"n", "order", "positions": {"v": [xn, xd, yn, yd]}, "mode"}. Numerators
/// and denominators that do not fit in 64 bits are written as decimal
/// strings; the reader accepts both.
std::string plan_to_json(const Storyplan& plan, Mode mode);
/// Throws Error{ParseError}.
PlanFile parse_plan_json(const std::string& text);

PlanFile read_plan_file(const std::filesystem::path& path);
void write_plan_file(const std::filesystem::path& path, const Storyplan& plan, Mode mode);

}  // namespace storyplan
