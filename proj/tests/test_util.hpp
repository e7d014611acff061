#pragma once

// Shared generators and helpers for the test suites.

#include <random>
#include <vector>

#include "slideturn/convex_body.hpp"
#include "slideturn/convex_fn.hpp"
#include "slideturn/geom.hpp"

namespace testutil {

using namespace slideturn;

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random strictly convex CCW polygon: random edge vectors re-centered to
/// sum to zero, sorted by angle, then partial-summed.
inline ConvexBody random_convex_polygon(Rng& rng, int nmin, int nmax, double scale,
                                        Point2 center = {0.0, 0.0}) {
  int n = uniform_int(rng, nmin, nmax);
  std::vector<Vec2> edges(n);
  for (;;) {
    Vec2 mean{0.0, 0.0};
    for (Vec2& e : edges) {
      e = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
      mean = mean + e;
    }
    mean = mean / static_cast<double>(n);
    for (Vec2& e : edges) e = e - mean;
    bool ok = true;
    for (const Vec2& e : edges) ok = ok && norm(e) > 1e-3;
    if (ok) break;
  }
  std::sort(edges.begin(), edges.end(),
            [](Vec2 a, Vec2 b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });
  std::vector<Point2> vs;
  Point2 p = center;
  double unit = scale / std::sqrt(static_cast<double>(n));
  for (int i = 0; i + 1 < n; ++i) {
    p = p + unit * edges[i];
    vs.push_back(p);
  }
  vs.push_back(center);
  return ConvexBody::polygon(std::move(vs));
}

inline ConvexBody translated(const ConvexBody& H, Vec2 by) {
  const Polygon& p = H.as_polygon();
  std::vector<Point2> vs;
  for (Point2 v : p.vertices) vs.push_back(v + by);
  return ConvexBody::polygon(std::move(vs));
}

inline double outer_radius(const ConvexBody& H, Point2 about) {
  double r = 0.0;
  if (H.is_polygon())
    for (Point2 v : H.as_polygon().vertices) r = std::max(r, distance(v, about));
  return r;
}

/// Two random polygons with separation gap at least `gap`.
inline std::pair<ConvexBody, ConvexBody> random_disjoint_pair(Rng& rng, double gap = 0.1) {
  ConvexBody H1 = random_convex_polygon(rng, 3, 12, uniform(rng, 0.5, 2.0));
  ConvexBody H2 = random_convex_polygon(rng, 3, 12, uniform(rng, 0.5, 2.0));
  double r1 = outer_radius(H1, {0.0, 0.0});
  double r2 = outer_radius(H2, {0.0, 0.0});
  double phi = uniform(rng, -kPi, kPi);
  double d = r1 + r2 + gap + uniform(rng, 0.05, 2.0);
  return {H1, translated(H2, d * Vec2{std::cos(phi), std::sin(phi)})};
}

/// Two random polygons sharing an interior point (hence intersecting).
inline std::pair<ConvexBody, ConvexBody> random_intersecting_pair(Rng& rng) {
  ConvexBody H1 = random_convex_polygon(rng, 3, 12, uniform(rng, 0.5, 2.0));
  ConvexBody H2 = random_convex_polygon(rng, 3, 12, uniform(rng, 0.5, 2.0));
  Vec2 shift = H1.centroid() - H2.centroid();
  return {H1, translated(H2, shift)};
}

/// Random convex piecewise-linear function with dyadic nodes and slopes, so
/// that every derived quantity (slopes, subdifferentials, t-values) is exact
/// in double precision.
inline PLConvexFunction random_dyadic_pl(Rng& rng, int max_breaks = 8) {
  double u = (16 + uniform_int(rng, 0, 16)) / 8.0;  // in [2, 4]
  int m = uniform_int(rng, 0, max_breaks);
  std::vector<int> ticks;
  while (static_cast<int>(ticks.size()) < m) {
    int j = uniform_int(rng, -250, 250);
    bool dup = j == 0;
    for (int t : ticks) dup = dup || t == j;
    if (!dup) ticks.push_back(j);
  }
  std::sort(ticks.begin(), ticks.end());

  std::vector<double> xs{-u};
  for (int j : ticks) xs.push_back(u * j / 256.0);
  xs.push_back(u);

  std::vector<double> slopes;
  double s = -uniform_int(rng, 0, 64) / 16.0 - m / 16.0;
  for (int i = 0; i <= m; ++i) {
    slopes.push_back(s);
    s += (1 + uniform_int(rng, 0, 63)) / 32.0;
  }

  std::vector<double> ys{uniform_int(rng, -32, 32) / 16.0};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    ys.push_back(ys.back() + slopes[i] * (xs[i + 1] - xs[i]));
  return PLConvexFunction::from_nodes(std::move(xs), std::move(ys));
}

/// Dyadic half-width for D; by construction 0 < v < u.
inline double dyadic_inner_width(const PLConvexFunction& f) { return f.half_width_hi() / 2.0; }

/// Random dyadic DPoint of D for the given f and v.
inline DPoint random_dyadic_dpoint(Rng& rng, const PLConvexFunction& f, double v) {
  double x = v * uniform_int(rng, -1024, 1024) / 1024.0;
  SubdiffInterval sd = f.subdifferential(x);
  double d = sd.lo + (sd.hi - sd.lo) * uniform_int(rng, 0, 16) / 16.0;
  return {x, d};
}

}  // namespace testutil
