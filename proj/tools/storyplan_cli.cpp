// Command-line front end: gen, plan, verify, decide, render.
//
// Exit codes: 0 success, 1 negative verdict or failed verification,
// 2 usage or input error, 3 search budget exhausted.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "storyplan/dispatch.hpp"
#include "storyplan/error.hpp"
#include "storyplan/generators.hpp"
#include "storyplan/io.hpp"
#include "storyplan/oracle.hpp"
#include "storyplan/render.hpp"

using namespace storyplan;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::uint64_t default_seed() {
  const char* s = std::getenv("STORYPLAN_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, std::string("STORYPLAN_SEED is not an unsigned integer: ") + s);
  }
}

// A graph file, or failing that a family descriptor; k<n> and grid<w>x<h>
// are accepted as shorthands.
Graph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_graph_file(arg);
  std::smatch m;
  std::string descriptor = arg;
  if (std::regex_match(arg, m, std::regex(R"(k(\d+))"))) descriptor = "complete:" + m[1].str();
  if (std::regex_match(arg, m, std::regex(R"(k(\d+),(\d+))"))) {
    descriptor = "complete-bipartite:" + m[1].str() + "," + m[2].str();
  }
  if (std::regex_match(arg, m, std::regex(R"(grid(\d+)x(\d+))"))) descriptor = "grid:" + m[1].str() + "," + m[2].str();
  try {
    return generate_named(descriptor, default_seed());
  } catch (const Error& e) {
    throw Error(ErrorCode::IoError, "'" + arg + "' is neither a readable graph file nor a known family (" + e.what() + ")");
  }
}

void print_plan_summary(const Graph& g, const Storyplan& plan, Mode mode, std::ostream& out) {
  const VerifyReport r = verify_storyplan(g, plan, mode);
  out << "step  new  visible  edges  plane  class\n";
  const auto fs = frames(g, plan.order);
  for (std::size_t i = 0; i < r.per_frame.size(); ++i) {
    const FrameReport& f = r.per_frame[i];
    out << std::setw(4) << f.step << "  " << std::setw(3) << fs[i].new_vertex << "  " << std::setw(7)
        << fs[i].visible.size() << "  " << std::setw(5) << f.edges << "  " << std::setw(5)
        << (f.plane_ok ? "ok" : "FAIL") << "  " << (f.class_ok ? "ok" : "FAIL") << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Storyplan generation, planning, verification, decision and rendering"};
  app.require_subcommand(1);

  std::string family, out_path, in_path, plan_path, mode_name = "forest", algorithm_name = "auto";
  int max_n = 12, jobs = 1;
  bool symmetry = true;
  std::uint64_t budget = 1'000'000'000;
  RenderConfig render_config;
  bool no_labels = false, no_highlight = false;

  auto* gen = app.add_subcommand("gen", "Generate a named graph in the text format");
  gen->add_option("--family", family, "e.g. petersen, platonic:octa, blown-cycle:5,2, grid:4,4, random-cubic:20")
      ->required();
  gen->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* plan = app.add_subcommand("plan", "Compute a storyplan and write it as JSON");
  plan->add_option("-i,--input", in_path, "Graph file or family descriptor")->required();
  plan->add_option("--mode", mode_name, "forest | outerplanar | planar")->capture_default_str();
  plan->add_option("--algorithm", algorithm_name, "auto | bipartite | two-tree | subcubic | outer-face | planar | fixed-drawing")
      ->capture_default_str();
  plan->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check a plan against a graph");
  verify->add_option("-i,--input", in_path, "Graph file or family descriptor")->required();
  verify->add_option("-p,--plan", plan_path, "Plan JSON")->required();
  auto* verify_mode = verify->add_option("--mode", mode_name, "forest | outerplanar | planar (default: the plan's)");

  auto* decide = app.add_subcommand("decide", "Search for an order whose frame graphs lie in the class");
  decide->add_option("-i,--input", in_path, "Graph file or family descriptor")->required();
  decide->add_option("--mode,--class", mode_name, "forest | outerplanar | planar")->capture_default_str();
  decide->add_option("--max-n", max_n, "Refuse larger graphs")->capture_default_str();
  decide->add_flag("--symmetry,!--no-symmetry", symmetry,
                   "One first vertex per automorphism orbit (default on; --no-symmetry tries them all)");
  decide->add_option("--budget", budget, "Node budget")->capture_default_str();
  decide->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Write one SVG per frame and reduced frame");
  render->add_option("-i,--input", in_path, "Graph file or family descriptor")->required();
  render->add_option("-p,--plan", plan_path, "Plan JSON")->required();
  render->add_option("-o,--output", out_path, "Output directory")->required();
  render->add_option("--width", render_config.width)->capture_default_str();
  render->add_option("--height", render_config.height)->capture_default_str();
  render->add_option("--margin", render_config.margin)->capture_default_str();
  render->add_option("--radius", render_config.vertex_radius)->capture_default_str();
  render->add_option("--stroke", render_config.stroke_width)->capture_default_str();
  render->add_flag("--no-labels", no_labels);
  render->add_flag("--no-highlight", no_highlight);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const Graph g = generate_named(family, default_seed());
      if (out_path.empty()) {
        write_graph(std::cout, g);
      } else {
        write_graph_file(out_path, g);
        std::cerr << "wrote " << g.vertex_count() << " vertices, " << g.edge_count() << " edges to " << out_path
                  << '\n';
      }
      return kOk;
    }

    if (*plan) {
      const Graph g = load_graph(in_path);
      const Mode mode = parse_mode(mode_name);
      const PlanResult result = plan_storyplan(g, mode, parse_algorithm(algorithm_name));
      const VerifyReport report = verify_storyplan(g, result.plan, mode);
      if (!report.ok) {
        std::cerr << "internal error: planner output fails verification: " << report.first_violation.value_or("")
                  << '\n';
        return kNegative;
      }
      if (out_path.empty()) {
        std::cout << plan_to_json(result.plan, mode);
      } else {
        write_plan_file(out_path, result.plan, mode);
      }
      std::cerr << to_string(result.algorithm) << " planner: " << result.plan.order.size()
                << " steps, at most " << report.max_edges << " edges per frame\n";
      return kOk;
    }

    if (*verify) {
      const Graph g = load_graph(in_path);
      const PlanFile file = read_plan_file(plan_path);
      Mode mode = Mode::Forest;
      if (verify_mode->count() > 0) {
        mode = parse_mode(mode_name);
      } else if (file.mode) {
        mode = *file.mode;
      }
      if (file.n != g.vertex_count()) {
        std::cout << "invalid: plan is for " << file.n << " vertices, graph has " << g.vertex_count() << '\n';
        return kNegative;
      }
      const VerifyReport report = verify_storyplan(g, file.plan, mode);
      if (file.plan.order.size() == static_cast<std::size_t>(g.vertex_count()) && report.per_frame.size() > 0) {
        print_plan_summary(g, file.plan, mode, std::cout);
      }
      if (report.ok) {
        std::cout << "valid " << to_string(mode) << " storyplan; at most " << report.max_edges
                  << " edges per frame\n";
        return kOk;
      }
      std::cout << "invalid: " << report.first_violation.value_or("unknown violation") << '\n';
      return kNegative;
    }

    if (*decide) {
      const Graph g = load_graph(in_path);
      DecideOptions opts;
      opts.max_n = max_n;
      opts.symmetry = symmetry;
      opts.node_budget = budget;
      opts.jobs = jobs;
      const Mode mode = parse_mode(mode_name);
      const Verdict v = decide_storyplan(g, mode, opts);
      std::cout << "class: " << to_string(mode) << " (frame graphs only; positions are not searched)\n";
      std::cout << "nodes: " << v.nodes_explored << '\n';
      if (v.budget_exhausted) {
        std::cout << "budget-exhausted\n";
        return kBudget;
      }
      if (!v.feasible) {
        std::cout << "infeasible\n";
        return kNegative;
      }
      std::cout << "feasible\nwitness:";
      for (Vertex x : *v.witness) std::cout << ' ' << x;
      std::cout << '\n';
      return kOk;
    }

    if (*render) {
      const Graph g = load_graph(in_path);
      const PlanFile file = read_plan_file(plan_path);
      render_config.show_labels = !no_labels;
      render_config.highlight_new = !no_highlight;
      const auto written = render_storyplan(g, file.plan, out_path, render_config);
      std::cout << "wrote " << written.size() << " SVG files to " << out_path << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::NoApplicablePlanner:
      case ErrorCode::ParseError:
      case ErrorCode::IoError:
      case ErrorCode::OutOfRange:
      case ErrorCode::DuplicateEdge:
      case ErrorCode::SelfLoop:
      case ErrorCode::BadParams:
      case ErrorCode::TooLarge:
      case ErrorCode::MissingPosition:
      case ErrorCode::NotBijective:
        return kUsage;
      default:
        return kNegative;
    }
  }
  return kUsage;
}
