#pragma once

// Supporting lines per direction, semitangents and corner detection per
// boundary point, closest pairs, and strict separation of disjoint bodies.

#include <limits>
#include <vector>

#include "slideturn/convex_body.hpp"
#include "slideturn/errors.hpp"
#include "slideturn/geom.hpp"

namespace slideturn {

/// A boundary point together with a supporting line through it.
struct PointedSupportingLine {
  Point2 point;
  DirectedLine line;
};

/// The unique supporting line of direction alpha. The witness point is the
/// counterclockwise-first point of the touched face, which makes the result
/// deterministic and consistent with slide-curve traversal order.
inline PointedSupportingLine supporting_line(const ConvexBody& H, Direction alpha) {
  Point2 p = extreme_set(H, alpha).first();
  return {p, DirectedLine{p, alpha}};
}

/// First and last semitangents at a boundary point. They coincide (the
/// tangent) exactly at regular points.
struct SemitangentPair {
  DirectedLine first;  // backward-rotation extreme of the fan
  DirectedLine last;   // forward-rotation extreme
  bool is_corner = false;
};

inline SemitangentPair semitangents(const ConvexBody& H, Point2 P, double tol = kTol) {
  if (contains(H, P, tol) != Containment::Boundary)
    throw Error(Errc::NotOnBoundary, "semitangents requires a boundary point");

  if (const auto* poly = std::get_if<Polygon>(&H.rep())) {
    std::size_t n = poly->vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (distance(P, poly->vertices[i]) <= tol) {
        Point2 prev = poly->vertices[(i + n - 1) % n];
        Point2 next = poly->vertices[(i + 1) % n];
        Direction din = Direction::of_vector(poly->vertices[i] - prev);
        Direction dout = Direction::of_vector(next - poly->vertices[i]);
        return {DirectedLine{poly->vertices[i], din}, DirectedLine{poly->vertices[i], dout},
                !same_direction(din, dout, 1e-12)};
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      Point2 a = poly->vertices[i], b = poly->vertices[(i + 1) % n];
      auto [q, t] = point_segment_closest(P, a, b);
      if (distance(P, q) <= tol) {
        DirectedLine l{q, Direction::of_vector(b - a)};
        return {l, l, false};
      }
    }
    throw Error(Errc::NotOnBoundary, "point not located on polygon boundary");
  }
  if (const auto* c = std::get_if<Disc>(&H.rep())) {
    Direction t = Direction::of_vector(P - c->center).rotated(kPi / 2.0);
    DirectedLine l{P, t};
    return {l, l, false};
  }
  if (const auto* s = std::get_if<Segment>(&H.rep())) {
    Direction e = Direction::of_vector(s->b - s->a);
    if (distance(P, s->a) <= tol)
      return {DirectedLine{s->a, e.opposite()}, DirectedLine{s->a, e}, true};
    if (distance(P, s->b) <= tol)
      return {DirectedLine{s->b, e}, DirectedLine{s->b, e.opposite()}, true};
    // Interior segment points carry two isolated supporting directions; we
    // report the forward-traversal side and flag no corner.
    DirectedLine l{P, e};
    return {l, l, false};
  }
  if (const auto* q = std::get_if<SinglePoint>(&H.rep())) {
    // Every direction supports a singleton; the fan is the full circle.
    return {DirectedLine{q->p, Direction(0.0)}, DirectedLine{q->p, Direction(0.0)}, false};
  }

  // Generic bodies are treated as smooth: tangent from the outward normal at
  // the nearest probe direction.
  Direction best(0.0);
  double best_err = std::numeric_limits<double>::infinity();
  const int probes = 4096;
  for (int i = 0; i < probes; ++i) {
    Direction d(-kPi + kTwoPi * i / probes);
    double err = std::fabs(H.support(d) - dot(P - Point2{}, d.unit()));
    if (err < best_err) {
      best_err = err;
      best = d;
    }
  }
  DirectedLine l{P, best.rotated(kPi / 2.0)};
  return {l, l, false};
}

/// Closest pair of points between two bodies; distance 0 iff they intersect.
struct ClosestPair {
  Point2 on_first;
  Point2 on_second;
  double dist = 0.0;
};

namespace detail {

/// Boundary of polygon-like bodies as a list of closed segments.
inline std::vector<std::pair<Point2, Point2>> boundary_segments(const ConvexBody& H) {
  std::vector<std::pair<Point2, Point2>> segs;
  if (const auto* p = std::get_if<Polygon>(&H.rep())) {
    std::size_t n = p->vertices.size();
    for (std::size_t i = 0; i < n; ++i) segs.emplace_back(p->vertices[i], p->vertices[(i + 1) % n]);
  } else if (const auto* s = std::get_if<Segment>(&H.rep())) {
    segs.emplace_back(s->a, s->b);
  } else if (const auto* q = std::get_if<SinglePoint>(&H.rep())) {
    segs.emplace_back(q->p, q->p);
  }
  return segs;
}

inline Point2 any_point(const ConvexBody& H) {
  if (const auto* p = std::get_if<Polygon>(&H.rep())) return p->vertices[0];
  if (const auto* c = std::get_if<Disc>(&H.rep())) return c->center;
  if (const auto* s = std::get_if<Segment>(&H.rep())) return s->a;
  if (const auto* q = std::get_if<SinglePoint>(&H.rep())) return q->p;
  return H.centroid();
}

}  // namespace detail

/// Nearest point of H to X (X itself when X is inside H).
inline Point2 closest_point_on_body(const ConvexBody& H, Point2 X) {
  if (contains(H, X) != Containment::Outside && H.has_interior()) return X;
  if (const auto* c = std::get_if<Disc>(&H.rep())) {
    Vec2 v = X - c->center;
    double n = norm(v);
    if (n <= c->radius) return X;
    return c->center + (c->radius / n) * v;
  }
  auto segs = detail::boundary_segments(H);
  if (!segs.empty()) {
    Point2 best{};
    double bd = std::numeric_limits<double>::infinity();
    for (auto& [a, b] : segs) {
      Point2 q = point_segment_closest(X, a, b).first;
      double d = distance(X, q);
      if (d < bd) {
        bd = d;
        best = q;
      }
    }
    return best;
  }
  // Generic: coarse scan over boundary extreme points, then golden-section
  // refinement of the angular parameter.
  const int probes = 4096;
  double best_d = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  for (int i = 0; i < probes; ++i) {
    double t = -kPi + kTwoPi * i / probes;
    double d = distance(X, std::get<Generic>(H.rep()).extreme(Direction(t)));
    if (d < best_d) {
      best_d = d;
      best_t = t;
    }
  }
  auto at = [&](double t) { return std::get<Generic>(H.rep()).extreme(Direction(t)); };
  double lo = best_t - kTwoPi / probes, hi = best_t + kTwoPi / probes;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
  for (int i = 0; i < 200; ++i) {
    if (distance(X, at(a)) < distance(X, at(b))) {
      hi = b;
      b = a;
      a = hi - gr * (hi - lo);
    } else {
      lo = a;
      a = b;
      b = lo + gr * (hi - lo);
    }
  }
  return at(0.5 * (lo + hi));
}

inline ClosestPair closest_pair(const ConvexBody& H1, const ConvexBody& H2) {
  const auto* d1 = std::get_if<Disc>(&H1.rep());
  const auto* d2 = std::get_if<Disc>(&H2.rep());

  if (d1 && d2) {
    Vec2 v = d2->center - d1->center;
    double n = norm(v);
    double gap = n - d1->radius - d2->radius;
    if (gap > 0.0) {
      Vec2 u = v / n;
      return {d1->center + d1->radius * u, d2->center - d2->radius * u, gap};
    }
    Point2 w = n > 0.0 ? d1->center + std::min(d1->radius, n) * (v / n) : d1->center;
    return {w, w, 0.0};
  }
  if (d1 || d2) {
    // Distance from a disc to a convex set is the center distance minus r.
    const ConvexBody& disc_body = d1 ? H1 : H2;
    const ConvexBody& other = d1 ? H2 : H1;
    const Disc& dc = d1 ? *d1 : *d2;
    if (!other.is_generic()) {
      if (contains(other, dc.center) != Containment::Outside) {
        ClosestPair r{dc.center, dc.center, 0.0};
        return d1 ? r : ClosestPair{r.on_second, r.on_first, 0.0};
      }
      Point2 q = closest_point_on_body(other, dc.center);
      double n = distance(q, dc.center);
      if (n <= dc.radius) return {q, q, 0.0};
      Point2 on_disc = dc.center + (dc.radius / n) * (q - dc.center);
      ClosestPair r{on_disc, q, n - dc.radius};
      if (&disc_body == &H2) std::swap(r.on_first, r.on_second);
      return r;
    }
  }

  bool poly1 = !H1.is_generic() && !H1.is_disc();
  bool poly2 = !H2.is_generic() && !H2.is_disc();
  if (poly1 && poly2) {
    // Exact edge-pair minimization plus containment checks.
    if (H1.has_interior() && contains(H1, detail::any_point(H2)) != Containment::Outside) {
      Point2 w = detail::any_point(H2);
      return {w, w, 0.0};
    }
    if (H2.has_interior() && contains(H2, detail::any_point(H1)) != Containment::Outside) {
      Point2 w = detail::any_point(H1);
      return {w, w, 0.0};
    }
    ClosestPair best;
    best.dist = std::numeric_limits<double>::infinity();
    for (auto& [a1, a2] : detail::boundary_segments(H1))
      for (auto& [b1, b2] : detail::boundary_segments(H2)) {
        SegmentClosest sc = segment_segment_closest(a1, a2, b1, b2);
        if (sc.dist < best.dist) best = {sc.on_a, sc.on_b, sc.dist};
      }
    return best;
  }

  // Generic route: maximize the support gap over sampled normals, then
  // tighten witnesses by alternating projection.
  const int probes = 4096;
  double best_gap = -std::numeric_limits<double>::infinity();
  Direction best_d(0.0);
  for (int i = 0; i < probes; ++i) {
    Direction d(-kPi + kTwoPi * i / probes);
    double gap = -H2.support(d.opposite()) - H1.support(d);
    if (gap > best_gap) {
      best_gap = gap;
      best_d = d;
    }
  }
  Point2 a = H1.extreme_point(best_d);
  Point2 b = H2.extreme_point(best_d.opposite());
  for (int i = 0; i < 64; ++i) {
    a = closest_point_on_body(H1, b);
    b = closest_point_on_body(H2, a);
  }
  double dist = distance(a, b);
  if (best_gap <= kTol && dist <= 1e-6) return {a, a, 0.0};
  return {a, b, dist};
}

/// Strictly separating line realized as the perpendicular bisector of the
/// closest pair, directed so that H1 lies on the left.
inline DirectedLine separating_line(const ConvexBody& H1, const ConvexBody& H2, double tol = kTol) {
  ClosestPair cp = closest_pair(H1, H2);
  if (cp.dist <= tol) throw Error(Errc::NotDisjoint, "bodies are not strictly disjoint");
  Vec2 u = rot90ccw(normalized(cp.on_second - cp.on_first));
  return {midpoint(cp.on_first, cp.on_second), Direction::of_vector(u)};
}

/// Min/max signed side of a body against a directed line, computed from the
/// two support values; exact for polygons.
struct SideRange {
  double min_side = 0.0;
  double max_side = 0.0;
};

inline SideRange side_range(const DirectedLine& l, const ConvexBody& H) {
  Vec2 m = left_normal(l.dir);
  double base = dot(l.base - Point2{}, m);
  Direction md = Direction::of_vector(m);
  return {-H.support(md.opposite()) - base, H.support(md) - base};
}

/// True when l supports H (H in the closed left halfplane, touching).
inline bool is_supporting(const DirectedLine& l, const ConvexBody& H, double tol = kTol) {
  SideRange r = side_range(l, H);
  return r.min_side >= -tol && r.min_side <= tol;
}

}  // namespace slideturn
