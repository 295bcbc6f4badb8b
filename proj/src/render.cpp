#include "storyplan/render.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "storyplan/error.hpp"

namespace storyplan {

void RenderConfig::validate() const {
  if (width <= 0 || height <= 0) throw Error(ErrorCode::BadParams, "canvas size must be positive");
  if (margin < 0 || 2 * margin >= std::min(width, height)) {
    throw Error(ErrorCode::BadParams, "margin must be below half the canvas");
  }
  if (vertex_radius <= 0 || stroke_width <= 0) throw Error(ErrorCode::BadParams, "radius and stroke must be positive");
}

namespace {

struct Canvas {
  Rational min_x, min_y, scale;
  double offset_x = 0, offset_y = 0;
  int height = 0;

  std::pair<double, double> map(const Point& p) const {
    const double x = offset_x + ((p.x - min_x) * scale).convert_to<double>();
    const double y = height - (offset_y + ((p.y - min_y) * scale).convert_to<double>());
    return {x, y};
  }
};

Canvas fit(const Storyplan& plan, const RenderConfig& config) {
  const Point* first = nullptr;
  Rational min_x, max_x, min_y, max_y;
  for (const auto& p : plan.positions) {
    if (!p) continue;
    if (!first) {
      first = &*p;
      min_x = max_x = p->x;
      min_y = max_y = p->y;
    }
    min_x = std::min(min_x, p->x);
    max_x = std::max(max_x, p->x);
    min_y = std::min(min_y, p->y);
    max_y = std::max(max_y, p->y);
  }
  Canvas c;
  c.height = config.height;
  c.min_x = min_x;
  c.min_y = min_y;
  const Rational avail_w = config.width - 2 * config.margin;
  const Rational avail_h = config.height - 2 * config.margin;
  const Rational span_x = max_x - min_x, span_y = max_y - min_y;
  if (span_x == 0 && span_y == 0) {
    c.scale = 0;
  } else if (span_x == 0) {
    c.scale = avail_h / span_y;
  } else if (span_y == 0) {
    c.scale = avail_w / span_x;
  } else {
    c.scale = std::min(avail_w / span_x, avail_h / span_y);
  }
  c.offset_x = config.margin + ((avail_w - span_x * c.scale) / 2).convert_to<double>();
  c.offset_y = config.margin + ((avail_h - span_y * c.scale) / 2).convert_to<double>();
  return c;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_frame_svg(const Graph& g, const Storyplan& plan, const std::vector<Vertex>& visible,
                             Vertex highlight, const RenderConfig& config) {
  config.validate();
  const Canvas canvas = fit(plan, config);
  auto at = [&](Vertex v) -> const Point& {
    if (v < 0 || static_cast<std::size_t>(v) >= plan.positions.size() || !plan.positions[v]) {
      throw Error(ErrorCode::MissingPosition, "vertex " + std::to_string(v) + " has no position");
    }
    return *plan.positions[v];
  };
  std::vector<char> shown(g.vertex_count(), 0);
  for (Vertex v : visible) shown[v] = 1;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << config.width << "\" height=\"" << config.height
      << "\" viewBox=\"0 0 " << config.width << ' ' << config.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (auto [u, v] : g.edges()) {
    if (!shown[u] || !shown[v]) continue;
    const auto [x1, y1] = canvas.map(at(u));
    const auto [x2, y2] = canvas.map(at(v));
    svg << "<line class=\"edge\" x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\""
        << num(y2) << "\" stroke=\"#444\" stroke-width=\"" << num(config.stroke_width) << "\"/>\n";
  }
  for (Vertex v : visible) {
    const auto [x, y] = canvas.map(at(v));
    const bool fresh = config.highlight_new && v == highlight;
    svg << "<circle class=\"" << (fresh ? "vertex new" : "vertex") << "\" cx=\"" << num(x) << "\" cy=\"" << num(y)
        << "\" r=\"" << num(config.vertex_radius) << "\" fill=\"" << (fresh ? "#d62728" : "#1f77b4")
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (config.show_labels) {
      svg << "<text x=\"" << num(x + config.vertex_radius + 2) << "\" y=\"" << num(y - config.vertex_radius - 2)
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << v << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> render_storyplan(const Graph& g, const Storyplan& plan,
                                                    const std::filesystem::path& dir, const RenderConfig& config) {
  config.validate();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    written.push_back(path);
  };
  for (const Frame& f : frames(g, plan.order)) {
    const std::string stem = "frame_" + std::to_string(f.step);
    write(dir / (stem + ".svg"), render_frame_svg(g, plan, f.visible, f.new_vertex, config));
    if (f.prime) write(dir / (stem + "_prime.svg"), render_frame_svg(g, plan, *f.prime, -1, config));
  }
  return written;
}

}  // namespace storyplan
