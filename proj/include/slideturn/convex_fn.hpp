#pragma once

// Convex-function machinery: one-sided derivatives and
// subdifferentials of piecewise-linear convex functions, the dissipative set
// D with its lexicographic order, the map t(x, d) = x + d and its exact
// inversion, and local graph charts extracted from a convex body.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include "slideturn/convex_body.hpp"
#include "slideturn/errors.hpp"
#include "slideturn/geom.hpp"

namespace slideturn {

/// Closed interval [f'-(x0), f'+(x0)] of supporting slopes.
struct SubdiffInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double d, double tol = 0.0) const { return d >= lo - tol && d <= hi + tol; }
  double clamp(double d) const { return std::clamp(d, lo, hi); }
};

/// Convex piecewise-linear function on [-u, u], given by its graph nodes.
/// Segments with equal slopes are merged; slopes strictly increase.
class PLConvexFunction {
 public:
  static PLConvexFunction from_nodes(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
      throw Error(Errc::InvalidBody, "need at least two graph nodes");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      if (!(xs[i] < xs[i + 1])) throw Error(Errc::InvalidBody, "node abscissas must increase");

    PLConvexFunction f;
    double scale = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      scale = std::max(scale, std::fabs((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])));
    const double merge_tol = 1e-13 * std::max(1.0, scale);

    f.xs_.push_back(xs[0]);
    f.ys_.push_back(ys[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (f.xs_.size() >= 2) {
        std::size_t k = f.xs_.size();
        double s_prev = (f.ys_[k - 1] - f.ys_[k - 2]) / (f.xs_[k - 1] - f.xs_[k - 2]);
        double s_new = (ys[i] - f.ys_[k - 1]) / (xs[i] - f.xs_[k - 1]);
        if (std::fabs(s_new - s_prev) <= merge_tol) {
          f.xs_.back() = xs[i];
          f.ys_.back() = ys[i];
          continue;
        }
      }
      f.xs_.push_back(xs[i]);
      f.ys_.push_back(ys[i]);
    }
    for (std::size_t i = 0; i + 2 < f.xs_.size(); ++i)
      if (f.slope(i + 1) <= f.slope(i))
        throw Error(Errc::InvalidBody, "slopes must strictly increase (function not convex)");
    return f;
  }

  /// Domain half-width u; the function is handled on the open interval
  /// (-u, u) wherever one-sided derivatives are involved.
  double half_width_lo() const { return xs_.front(); }
  double half_width_hi() const { return xs_.back(); }

  std::size_t segment_count() const { return xs_.size() - 1; }
  double slope(std::size_t seg) const {
    return (ys_[seg + 1] - ys_[seg]) / (xs_[seg + 1] - xs_[seg]);
  }
  const std::vector<double>& node_xs() const { return xs_; }
  const std::vector<double>& node_ys() const { return ys_; }

  /// Interior breakpoints (node abscissas excluding the domain endpoints).
  std::vector<double> breakpoints() const {
    return std::vector<double>(xs_.begin() + 1, xs_.end() - 1);
  }

  double value(double x) const {
    check_closed_domain(x);
    std::size_t seg = segment_at(x);
    return ys_[seg] + slope(seg) * (x - xs_[seg]);
  }

  double left_deriv(double x) const {
    check_open_domain(x);
    std::size_t i = node_at(x);
    if (i != npos && i > 0) return slope(i - 1);
    return slope(segment_at(x));
  }

  double right_deriv(double x) const {
    check_open_domain(x);
    std::size_t i = node_at(x);
    if (i != npos && i + 1 < xs_.size()) return slope(i);
    return slope(segment_at(x));
  }

  SubdiffInterval subdifferential(double x) const { return {left_deriv(x), right_deriv(x)}; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void check_closed_domain(double x) const {
    if (x < xs_.front() || x > xs_.back())
      throw Error(Errc::OutOfDomain, "argument outside the function domain");
  }
  void check_open_domain(double x) const {
    if (x <= xs_.front() || x >= xs_.back())
      throw Error(Errc::OutOfDomain, "one-sided derivatives need an interior point");
  }

  std::size_t node_at(double x) const {
    auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
    if (it != xs_.end() && *it == x) return static_cast<std::size_t>(it - xs_.begin());
    return npos;
  }

  std::size_t segment_at(double x) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - xs_.begin() - 1, 0));
    return std::min(i, xs_.size() - 2);
  }

  std::vector<double> xs_, ys_;
};

/// One-sided derivatives at an interior point (Stolz: both exist, lo <= hi).
inline SubdiffInterval one_sided_derivs(const PLConvexFunction& f, double x0) {
  return f.subdifferential(x0);
}

/// A point of the dissipative set D = { (x, d) : x in [-v, v], d in df(x) }.
struct DPoint {
  double x = 0.0;
  double d = 0.0;
};

/// Lexicographic order on D.
inline bool lex_less(const DPoint& a, const DPoint& b) {
  return a.x < b.x || (a.x == b.x && a.d < b.d);
}

inline double t_map(const DPoint& p) { return p.x + p.d; }

struct TRange {
  double w1 = 0.0;
  double w2 = 0.0;
};

/// Range of t over D: [w1, w2] with w1 = -v + f'-(-v), w2 = v + f'+(v).
inline TRange t_range(const PLConvexFunction& f, double v) {
  if (!(v > 0.0) || v >= f.half_width_hi() || -v <= f.half_width_lo())
    throw Error(Errc::OutOfDomain, "need 0 < v < u");
  return {-v + f.left_deriv(-v), v + f.right_deriv(v)};
}

/// Inverse of t on D, located by an exact breakpoint walk: x + f'+(x) is
/// increasing and piecewise linear, so s is either swallowed by the
/// subdifferential jump at a node (x0 pinned there, d0 = s - x0) or lies on
/// a linear stretch (d0 equals the segment slope).
inline DPoint invert_t(const PLConvexFunction& f, double v, double s) {
  TRange r = t_range(f, v);
  double slack = 1e-12 * std::max({1.0, std::fabs(r.w1), std::fabs(r.w2)});
  if (s < r.w1 - slack || s > r.w2 + slack)
    throw Error(Errc::OutOfRange, "s outside [w1, w2]");
  s = std::clamp(s, r.w1, r.w2);

  std::vector<double> nodes;
  nodes.push_back(-v);
  for (double b : f.breakpoints())
    if (b > -v && b < v) nodes.push_back(b);
  nodes.push_back(v);

  for (double x : nodes) {
    double lo = x + f.left_deriv(x);
    double hi = x + f.right_deriv(x);
    if (s >= lo && s <= hi) return {x, s - x};
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    double slope = f.right_deriv(nodes[i]);  // constant on the open segment
    double lo = nodes[i] + slope;
    double hi = nodes[i + 1] + slope;
    if (s > lo && s < hi) return {s - slope, slope};
  }
  // The node and segment cases tile [w1, w2]; unreachable.
  assert(false);
  throw Error(Errc::OutOfRange, "inversion failed to bracket s");
}

/// Rigid frame mapping world coordinates to chart coordinates in which the
/// chart origin is the boundary point and +y points at the interior point O.
struct ChartFrame {
  Point2 origin;  // world position of the chart origin (P0)
  Vec2 ex, ey;    // world images of the chart axes (orthonormal)

  Point2 to_chart(Point2 world) const {
    Vec2 d = world - origin;
    return {dot(d, ex), dot(d, ey)};
  }
  Point2 to_world(double x, double y) const { return origin + x * ex + y * ey; }
  /// World direction of a chart-space direction vector (1, slope).
  Direction dir_to_world(double slope) const { return Direction::of_vector(ex + slope * ey); }
};

/// Local graph chart of the boundary near P0: the boundary arc inside the
/// strip |x| <= epsilon is the graph of a convex function in chart
/// coordinates, exact and piecewise linear for polygons.
struct Chart {
  ChartFrame frame;
  PLConvexFunction f;
  double epsilon = 0.0;  // strip half-width
  Point2 o_point;        // interior point O (world)
  Point2 p0;             // boundary point (world)
};

namespace detail {

inline double interior_depth(const ConvexBody& H, Point2 O) {
  if (const auto* p = std::get_if<Polygon>(&H.rep())) {
    double m = std::numeric_limits<double>::infinity();
    std::size_t n = p->vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      Point2 a = p->vertices[i], b = p->vertices[(i + 1) % n];
      m = std::min(m, cross(normalized(b - a), O - a));
    }
    return m;
  }
  if (const auto* c = std::get_if<Disc>(&H.rep())) return c->radius - distance(O, c->center);
  double m = std::numeric_limits<double>::infinity();
  const int probes = 1024;
  for (int i = 0; i < probes; ++i) {
    Direction d(-kPi + kTwoPi * i / probes);
    m = std::min(m, H.support(d) - dot(O - Point2{}, d.unit()));
  }
  return m;
}

}  // namespace detail

inline Chart chart_at(const ConvexBody& H, Point2 P0, int smooth_nodes = 1024) {
  if (!H.has_interior()) throw Error(Errc::DegenerateBody, "chart needs a nonempty interior");
  if (contains(H, P0) != Containment::Boundary)
    throw Error(Errc::NotOnBoundary, "chart anchor must lie on the boundary");

  Point2 O = H.centroid();
  double depth = detail::interior_depth(H, O);
  assert(depth > 0.0);
  double eps = depth / 4.0;

  ChartFrame frame;
  frame.origin = P0;
  frame.ey = normalized(O - P0);
  frame.ex = rot90cw(frame.ey);

  std::vector<double> xs, ys;

  if (const auto* poly = std::get_if<Polygon>(&H.rep())) {
    // Walk the boundary both ways from P0 collecting chart nodes until the
    // strip is covered; chart-x is strictly monotone along the lower arc.
    std::size_t n = poly->vertices.size();
    std::vector<Point2> chain;  // in CCW order, chart-x increasing
    std::size_t at_vertex = n, on_edge = n;
    for (std::size_t i = 0; i < n && at_vertex == n; ++i)
      if (distance(P0, poly->vertices[i]) <= kTol) at_vertex = i;
    if (at_vertex == n)
      for (std::size_t i = 0; i < n && on_edge == n; ++i) {
        Point2 a = poly->vertices[i], b = poly->vertices[(i + 1) % n];
        auto [q, t] = point_segment_closest(P0, a, b);
        if (distance(P0, q) <= kTol && t > 0.0 && t < 1.0) on_edge = i;
      }
    if (at_vertex == n && on_edge == n)
      throw Error(Errc::NotOnBoundary, "anchor not located on polygon boundary");

    chain.push_back(P0);
    // Backward (CW) until chart-x <= -eps.
    std::size_t i = at_vertex != n ? at_vertex : (on_edge + 1) % n;
    for (std::size_t guard = 0; guard <= n + 1; ++guard) {
      i = (i + n - 1) % n;
      Point2 v = poly->vertices[i];
      chain.insert(chain.begin(), v);
      if (frame.to_chart(v).x <= -eps) break;
      assert(guard < n + 1);
    }
    // Forward (CCW) until chart-x >= eps.
    i = at_vertex != n ? at_vertex : (on_edge + 1) % n;
    if (at_vertex == n) chain.push_back(poly->vertices[i]);
    for (std::size_t guard = 0; guard <= n + 1; ++guard) {
      if (frame.to_chart(chain.back()).x >= eps) break;
      i = (i + 1) % n;
      chain.push_back(poly->vertices[i]);
      assert(guard < n + 1);
    }

    // Convert to chart nodes clipped to [-eps, eps].
    std::vector<Point2> cpts;
    for (Point2 w : chain) cpts.push_back(frame.to_chart(w));
    for (std::size_t j = 0; j + 1 < cpts.size(); ++j)
      assert(cpts[j].x < cpts[j + 1].x + 1e-12);
    auto y_at = [&](double x) {
      for (std::size_t j = 0; j + 1 < cpts.size(); ++j)
        if (x >= cpts[j].x && x <= cpts[j + 1].x) {
          double t = (x - cpts[j].x) / (cpts[j + 1].x - cpts[j].x);
          return cpts[j].y + t * (cpts[j + 1].y - cpts[j].y);
        }
      return cpts.back().y;
    };
    xs.push_back(-eps);
    ys.push_back(y_at(-eps));
    for (const Point2& c : cpts)
      if (c.x > -eps + 1e-15 && c.x < eps - 1e-15) {
        xs.push_back(c.x);
        ys.push_back(c.y);
      }
    xs.push_back(eps);
    ys.push_back(y_at(eps));
  } else if (const auto* disc = std::get_if<Disc>(&H.rep())) {
    // Closed form: circle of radius r with center at chart (0, r).
    double r = disc->radius;
    for (int j = 0; j <= smooth_nodes; ++j) {
      double x = -eps + 2.0 * eps * j / smooth_nodes;
      xs.push_back(x);
      ys.push_back(r - std::sqrt(r * r - x * x));
    }
  } else {
    // Generic: bisect along vertical chart lines between a point far below
    // and O; the crossing is unique on the lower branch.
    double h = distance(O, P0);
    double span = h + 4.0 * H.perimeter();
    for (int j = 0; j <= smooth_nodes; ++j) {
      double x = -eps + 2.0 * eps * j / smooth_nodes;
      double lo = -span, hi = h;
      for (int it = 0; it < 120; ++it) {
        double mid = 0.5 * (lo + hi);
        if (contains(H, frame.to_world(x, mid)) == Containment::Outside)
          lo = mid;
        else
          hi = mid;
      }
      xs.push_back(x);
      ys.push_back(0.5 * (lo + hi));
    }
  }

  Chart chart{frame, PLConvexFunction::from_nodes(std::move(xs), std::move(ys)), eps, O, P0};
  return chart;
}

}  // namespace slideturn
