#include "storyplan/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "storyplan/error.hpp"

namespace storyplan {

namespace {

using json = nlohmann::json;
using Integer = boost::multiprecision::mpz_int;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

long long read_count(std::istream& in, const std::string& what) {
  long long value = 0;
  if (!(in >> value)) parse_error("expected " + what);
  return value;
}

json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return z.convert_to<std::int64_t>();
  }
  return z.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      parse_error("bad integer '" + s + "'");
    }
    return Integer(s);
  }
  parse_error("expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& num, const json& den) {
  const Integer d = integer_from_json(den);
  if (d == 0) parse_error("zero denominator");
  return Rational(integer_from_json(num), d);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  const long long n = read_count(in, "vertex count");
  const long long m = read_count(in, "edge count");
  if (n < 0 || m < 0) parse_error("negative count in header");
  if (n > std::numeric_limits<int>::max()) parse_error("vertex count too large");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    const long long u = read_count(in, "edge " + std::to_string(i + 1));
    const long long v = read_count(in, "edge " + std::to_string(i + 1));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::OutOfRange, "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string extra;
  if (in >> extra) parse_error("trailing data after " + std::to_string(m) + " edges");
  return Graph::build(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_graph(in);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::string plan_to_json(const Storyplan& plan, Mode mode) {
  json positions = json::object();
  for (std::size_t v = 0; v < plan.positions.size(); ++v) {
    if (!plan.positions[v]) continue;
    const Point& p = *plan.positions[v];
    positions[std::to_string(v)] = json::array({integer_to_json(numerator(p.x)), integer_to_json(denominator(p.x)),
                                                integer_to_json(numerator(p.y)), integer_to_json(denominator(p.y))});
  }
  const json doc = {{"n", plan.order.size()}, {"order", plan.order}, {"positions", positions}, {"mode", to_string(mode)}};
  return doc.dump(2) + "\n";
}

PlanFile parse_plan_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("plan must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) parse_error("missing integer field 'n'");
  if (!doc.contains("order") || !doc["order"].is_array()) parse_error("missing array field 'order'");
  PlanFile file;
  file.n = doc["n"].get<int>();
  if (file.n < 0) parse_error("negative n");
  for (const json& v : doc["order"]) {
    if (!v.is_number_integer()) parse_error("order entries must be integers");
    file.plan.order.push_back(v.get<Vertex>());
  }
  file.plan.positions.assign(file.n, std::nullopt);
  if (doc.contains("positions")) {
    if (!doc["positions"].is_object()) parse_error("'positions' must be an object");
    for (const auto& [key, value] : doc["positions"].items()) {
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
        parse_error("position key '" + key + "' is not a vertex");
      }
      const long long v = std::stoll(key);
      if (v >= file.n) parse_error("position for vertex " + key + " outside 0.." + std::to_string(file.n - 1));
      if (!value.is_array() || value.size() != 4) parse_error("position of " + key + " must be [xn, xd, yn, yd]");
      file.plan.positions[v] = Point(rational_from_json(value[0], value[1]), rational_from_json(value[2], value[3]));
    }
  }
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) parse_error("'mode' must be a string");
    file.mode = parse_mode(doc["mode"].get<std::string>());
  }
  return file;
}

PlanFile read_plan_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_plan_json(buffer.str());
}

void write_plan_file(const std::filesystem::path& path, const Storyplan& plan, Mode mode) {
  auto out = open_out(path);
  out << plan_to_json(plan, mode);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace storyplan
