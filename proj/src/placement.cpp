#include "storyplan/placement.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "storyplan/error.hpp"

namespace storyplan {

namespace {

std::vector<Point> directions() {
  std::vector<Point> out;
  for (int r = 1; r <= 3; ++r) {
    for (int a = -r; a <= r; ++a) {
      for (int b = -r; b <= r; ++b) {
        if (std::max(std::abs(a), std::abs(b)) != r || std::gcd(a, b) != 1) continue;
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::vector<Rational> radii() {
  std::vector<Rational> out;
  Rational h = 1;
  for (int k = 0; k <= 40; ++k, h /= 2) out.push_back(h);
  h = 2;
  for (int k = 1; k <= 12; ++k, h *= 2) out.push_back(h);
  return out;
}

Rational l1(const Point& d) { return abs(d.x) + abs(d.y); }

bool upper_half(const Point& d) { return d.y > 0 || (d.y == 0 && d.x > 0); }

// Bisectors of the gaps between consecutive directions anchor -> l and
// l -> anchor, sorted by angle.
std::vector<Point> gap_bisectors(const Point& anchor, std::span<const Point> landmarks) {
  std::vector<Point> rays;
  for (const Point& l : landmarks) {
    if (l == anchor) continue;
    const Point d = l - anchor;
    const Rational s = 1 / l1(d);
    rays.push_back(s * d);
    rays.push_back(-s * d);
  }
  std::sort(rays.begin(), rays.end(), [](const Point& a, const Point& b) {
    if (upper_half(a) != upper_half(b)) return upper_half(a);
    return a.x * b.y - a.y * b.x > 0;
  });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  std::vector<Point> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Point& a = rays[i];
    const Point& b = rays[(i + 1) % rays.size()];
    const Point mid = a + b;
    // gaps are below a half turn since every line contributes both directions
    if (mid.x != 0 || mid.y != 0) out.push_back(mid);
  }
  return out;
}

// The ray from v through a meets the closed triangle v, b, c beyond v.
bool ray_meets_triangle(const Point& v, const Point& a, const Point& b, const Point& c) {
  const int ob = orient(v, b, a);
  const int oc = orient(v, c, a);
  const int turn = orient(v, b, c);
  if (turn == 0) return false;
  // a - v inside the closed cone spanned by b - v and c - v
  return turn > 0 ? (ob >= 0 && oc <= 0) : (ob <= 0 && oc >= 0);
}

bool on_ray(const Point& origin, const Point& through, const Point& p) {
  if (p == origin) return true;
  if (orient(origin, through, p) != 0) return false;
  const Point d = through - origin, e = p - origin;
  return d.x * e.x + d.y * e.y > 0;
}

// Open half-plane of line (a, b) on the side of p, strict.
bool same_side(const Point& a, const Point& b, const Point& p, const Point& ref) {
  const int s = orient(a, b, p);
  return s != 0 && s == orient(a, b, ref);
}

bool opposite_side(const Point& a, const Point& b, const Point& p, const Point& ref) {
  const int s = orient(a, b, p);
  return s != 0 && s == -orient(a, b, ref);
}

// Open half-plane bounded by line v-x that contains neither v' nor v''.
bool beyond_line(const PlacementContext& ctx, const Point& x, const Point& p) {
  const int s = orient(ctx.v, x, p);
  if (s == 0) return false;
  return orient(ctx.v, x, *ctx.v1) != s && orient(ctx.v, x, *ctx.v2) != s;
}

// Names the ray met by the triangle "v'" for the one-ray cases.
struct OneRayView {
  Point near;  // v' (ray met)
  Point far;   // v'' (ray missed)
};

OneRayView one_ray_view(const PlacementContext& ctx) {
  if (ray_meets_triangle(ctx.v, *ctx.v1, *ctx.u, *ctx.w)) return {*ctx.v1, *ctx.v2};
  return {*ctx.v2, *ctx.v1};
}

}  // namespace

std::string to_string(PlacementCase c) {
  switch (c) {
    case PlacementCase::NeitherRay:
      return "neither-ray";
    case PlacementCase::BothRays:
      return "both-rays";
    case PlacementCase::OneRayNoCrossing:
      return "one-ray";
    case PlacementCase::OneRayCrossing:
      return "one-ray-crossing";
    case PlacementCase::TriangleVicinity:
      return "triangle-vicinity";
    case PlacementCase::Degenerate:
      return "degenerate";
  }
  return "?";
}

std::optional<Point> search_near(const Point& anchor, const PlacementCheck& accept,
                                 std::span<const Point> landmarks) {
  static const std::vector<Point> base = directions();
  static const std::vector<Rational> hs = radii();
  std::vector<Point> dirs = base;
  const std::vector<Point> extra = gap_bisectors(anchor, landmarks);
  dirs.insert(dirs.end(), extra.begin(), extra.end());
  for (const Rational& h : hs) {
    for (const Point& d : dirs) {
      const Point p = anchor + h * d;
      if (accept(p)) return p;
    }
  }
  return std::nullopt;
}

PlacementCase classify(const PlacementContext& ctx) {
  if (ctx.u_is_v1 || ctx.w_is_v2) return PlacementCase::TriangleVicinity;
  if (!ctx.u || !ctx.w || !ctx.v1 || !ctx.v2) return PlacementCase::Degenerate;
  const Point &v = ctx.v, &u = *ctx.u, &w = *ctx.w;
  if (orient(v, u, w) == 0) return PlacementCase::Degenerate;
  const bool hits1 = ray_meets_triangle(v, *ctx.v1, u, w);
  const bool hits2 = ray_meets_triangle(v, *ctx.v2, u, w);
  if (!hits1 && !hits2) return PlacementCase::NeitherRay;
  if (hits1 && hits2) return PlacementCase::BothRays;
  const OneRayView view = one_ray_view(ctx);
  return segments_cross({u, w}, {v, view.near}) ? PlacementCase::OneRayCrossing : PlacementCase::OneRayNoCrossing;
}

bool in_region(const PlacementContext& ctx, PlacementCase c, const Point& p) {
  switch (c) {
    case PlacementCase::NeitherRay:
      // the open cone at v spanned by u and w holds no leftover ray either
      return beyond_line(ctx, *ctx.u, p) || beyond_line(ctx, *ctx.w, p) ||
             (same_side(ctx.v, *ctx.u, p, *ctx.w) && same_side(ctx.v, *ctx.w, p, *ctx.u));
    case PlacementCase::BothRays:
      return beyond_line(ctx, *ctx.u, p) && beyond_line(ctx, *ctx.w, p);
    case PlacementCase::OneRayNoCrossing:
    case PlacementCase::OneRayCrossing: {
      const OneRayView view = one_ray_view(ctx);
      const Point &u = *ctx.u, &w = *ctx.w;
      const bool hu = opposite_side(u, view.near, p, ctx.v);
      const bool hw = opposite_side(w, view.near, p, ctx.v);
      const bool hv2 = same_side(ctx.v, view.far, p, view.near);
      if (on_ray(ctx.v, view.near, p) || !hv2) return false;
      return c == PlacementCase::OneRayCrossing ? (hu && hw) : (hu || hw);
    }
    case PlacementCase::TriangleVicinity:
    case PlacementCase::Degenerate:
      return true;
  }
  return true;
}

Placement place_cubic_vertex(const PlacementContext& ctx) {
  const PlacementCase kind = classify(ctx);
  if (auto p = search_near(
          ctx.v, [&](const Point& q) { return in_region(ctx, kind, q) && ctx.valid(q); }, ctx.landmarks)) {
    return {*p, kind, true};
  }
  std::vector<Point> anchors{ctx.v};
  if (ctx.u) anchors.push_back(*ctx.u);
  if (ctx.w) anchors.push_back(*ctx.w);
  for (const Point& a : anchors) {
    if (auto p = search_near(a, ctx.valid, ctx.landmarks)) return {*p, kind, false};
  }
  throw Error(ErrorCode::NoFeasibleRegion, "no position found for the new vertex (" + to_string(kind) + ")");
}

}  // namespace storyplan
