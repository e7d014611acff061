#pragma once

// Representations of nonempty compact convex sets in the plane and their
// basic queries: support values, extreme sets, membership, boundary rays.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "slideturn/errors.hpp"
#include "slideturn/geom.hpp"

namespace slideturn {

/// Strictly convex polygon, vertices counterclockwise, interior collinear
/// vertices removed at construction.
struct Polygon {
  std::vector<Point2> vertices;
};

struct Disc {
  Point2 center;
  double radius = 1.0;
};

struct Segment {
  Point2 a;
  Point2 b;
};

struct SinglePoint {
  Point2 p;
};

/// Body given by callbacks. `support(d)` must return max over the body of
/// dot(x, unit(d)), and `extreme(d)` a point achieving it. The direction
/// argument is the outward normal angle.
struct Generic {
  std::function<double(Direction)> support;
  std::function<Point2(Direction)> extreme;
};

namespace detail {

/// Cyclic run of vertices attaining the maximum of dot(v, n) within tol.
struct ExtremeRun {
  std::size_t first = 0;
  std::size_t count = 1;
};

inline ExtremeRun extreme_run(std::span<const Point2> vs, Vec2 n, double tol) {
  std::size_t nvs = vs.size();
  std::vector<double> dots(nvs);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < nvs; ++i) {
    dots[i] = dot(vs[i] - Point2{0.0, 0.0}, n);
    best = std::max(best, dots[i]);
  }
  std::vector<char> hit(nvs);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < nvs; ++i) {
    hit[i] = dots[i] >= best - tol;
    hits += hit[i];
  }
  if (hits == nvs) return {0, nvs};
  std::size_t first = 0;
  for (std::size_t i = 0; i < nvs; ++i) {
    std::size_t prev = (i + nvs - 1) % nvs;
    if (hit[i] && !hit[prev]) {
      first = i;
      break;
    }
  }
  std::size_t count = 0;
  for (std::size_t i = first; hit[i % nvs] && count < nvs; ++i) ++count;
  return {first, count};
}

inline double polygon_signed_area(std::span<const Point2> vs) {
  double a = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point2& p = vs[i];
    const Point2& q = vs[(i + 1) % vs.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

}  // namespace detail

class ConvexBody {
 public:
  using Rep = std::variant<Polygon, Disc, Segment, SinglePoint, Generic>;

  static ConvexBody polygon(std::vector<Point2> vertices) {
    return ConvexBody(Rep{Polygon{canonicalize_polygon(std::move(vertices))}});
  }

  static ConvexBody disc(Point2 center, double radius) {
    if (radius < 0.0) throw Error(Errc::InvalidBody, "disc radius must be nonnegative");
    if (radius == 0.0) return point(center);
    return ConvexBody(Rep{Disc{center, radius}});
  }

  static ConvexBody segment(Point2 a, Point2 b) {
    if (distance(a, b) == 0.0) return point(a);
    return ConvexBody(Rep{Segment{a, b}});
  }

  static ConvexBody point(Point2 p) { return ConvexBody(Rep{SinglePoint{p}}); }

  static ConvexBody generic(std::function<double(Direction)> support,
                            std::function<Point2(Direction)> extreme) {
    if (!support || !extreme) throw Error(Errc::InvalidBody, "generic body needs both callbacks");
    Generic g{std::move(support), std::move(extreme)};
    validate_generic(g);
    return ConvexBody(Rep{std::move(g)});
  }

  const Rep& rep() const { return rep_; }

  bool is_polygon() const { return std::holds_alternative<Polygon>(rep_); }
  bool is_disc() const { return std::holds_alternative<Disc>(rep_); }
  bool is_segment() const { return std::holds_alternative<Segment>(rep_); }
  bool is_point() const { return std::holds_alternative<SinglePoint>(rep_); }
  bool is_generic() const { return std::holds_alternative<Generic>(rep_); }

  const Polygon& as_polygon() const { return std::get<Polygon>(rep_); }
  const Disc& as_disc() const { return std::get<Disc>(rep_); }

  /// Segments and single points have empty interior; generic bodies are
  /// assumed full-dimensional.
  bool has_interior() const { return is_polygon() || is_disc() || is_generic(); }

  /// Support value h(d) = max over the body of dot(x, unit(d)).
  double support(Direction d) const {
    Vec2 u = d.unit();
    if (const auto* p = std::get_if<Polygon>(&rep_)) {
      double best = -std::numeric_limits<double>::infinity();
      for (const Point2& v : p->vertices) best = std::max(best, dot(v - Point2{}, u));
      return best;
    }
    if (const auto* c = std::get_if<Disc>(&rep_)) return dot(c->center - Point2{}, u) + c->radius;
    if (const auto* s = std::get_if<Segment>(&rep_))
      return std::max(dot(s->a - Point2{}, u), dot(s->b - Point2{}, u));
    if (const auto* q = std::get_if<SinglePoint>(&rep_)) return dot(q->p - Point2{}, u);
    return std::get<Generic>(rep_).support(d);
  }

  /// A point of the body achieving support(d); for polygon faces the
  /// counterclockwise-first vertex of the face.
  Point2 extreme_point(Direction d) const {
    Vec2 u = d.unit();
    if (const auto* p = std::get_if<Polygon>(&rep_)) {
      auto run = detail::extreme_run(p->vertices, u, kTol);
      return p->vertices[run.first];
    }
    if (const auto* c = std::get_if<Disc>(&rep_)) return c->center + c->radius * u;
    if (const auto* s = std::get_if<Segment>(&rep_)) {
      double da = dot(s->a - Point2{}, u), db = dot(s->b - Point2{}, u);
      if (std::fabs(da - db) <= kTol) {
        // Tie: the whole segment is the face. The CCW-first endpoint is the
        // one from which the face direction (+90 deg from the normal) leaves.
        Vec2 face_dir = rot90ccw(u);
        return dot(s->b - s->a, face_dir) > 0.0 ? s->a : s->b;
      }
      return da > db ? s->a : s->b;
    }
    if (const auto* q = std::get_if<SinglePoint>(&rep_)) return q->p;
    return std::get<Generic>(rep_).extreme(d);
  }

  double perimeter() const;
  Point2 boundary_point(double t) const;
  Point2 centroid() const;

 private:
  explicit ConvexBody(Rep rep) : rep_(std::move(rep)) {}

  static std::vector<Point2> canonicalize_polygon(std::vector<Point2> vs) {
    if (vs.size() < 3) throw Error(Errc::InvalidBody, "polygon needs at least 3 vertices");
    double scale = 1.0;
    for (const Point2& v : vs) scale = std::max({scale, std::fabs(v.x), std::fabs(v.y)});
    const double eps_len = 1e-12 * scale;
    const double eps_area = 1e-12 * scale * scale;

    // Drop consecutive duplicates.
    std::vector<Point2> out;
    for (const Point2& v : vs)
      if (out.empty() || distance(out.back(), v) > eps_len) out.push_back(v);
    while (out.size() > 1 && distance(out.front(), out.back()) <= eps_len) out.pop_back();
    if (out.size() < 3) throw Error(Errc::InvalidBody, "polygon degenerates to fewer than 3 points");

    if (detail::polygon_signed_area(out) < 0.0) std::reverse(out.begin(), out.end());

    // Drop interior collinear vertices; reject genuinely reflex corners.
    bool changed = true;
    while (changed && out.size() >= 3) {
      changed = false;
      for (std::size_t i = 0; i < out.size(); ++i) {
        std::size_t n = out.size();
        Point2 a = out[(i + n - 1) % n], b = out[i], c = out[(i + 1) % n];
        double cr = cross(b - a, c - b);
        if (cr <= eps_area) {
          if (cr < -eps_area) throw Error(Errc::InvalidBody, "polygon is not convex");
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    if (out.size() < 3) throw Error(Errc::InvalidBody, "polygon degenerates to fewer than 3 points");
    return out;
  }

  static void validate_generic(const Generic& g) {
    const int probes = 64;
    for (int i = 0; i < probes; ++i) {
      Direction d(-kPi + kTwoPi * i / probes);
      double h = g.support(d);
      if (!std::isfinite(h)) throw Error(Errc::InvalidBody, "generic support value not finite");
      Point2 e = g.extreme(d);
      double tol = kTol * std::max(1.0, std::fabs(h));
      if (std::fabs(dot(e - Point2{}, d.unit()) - h) > tol)
        throw Error(Errc::InvalidBody, "generic extreme point does not achieve support value");
      // Sublinearity spot check h(u) + h(v) >= |u + v| h(angle(u + v)).
      Direction d2(-kPi + kTwoPi * ((i * 7 + 3) % probes) / probes);
      Vec2 w = d.unit() + d2.unit();
      double wn = norm(w);
      if (wn > 1e-6 && wn * g.support(Direction::of_vector(w)) > g.support(d) + g.support(d2) + tol)
        throw Error(Errc::InvalidBody, "generic support function is not sublinear");
    }
  }

  Rep rep_;
};

/// The set of boundary points met by the unique supporting line of a given
/// direction: a single point or a whole face.
struct ExtremeSet {
  struct Single {
    Point2 p;
  };
  struct Edge {
    Point2 from;  // counterclockwise-first point of the face
    Point2 to;
  };
  std::variant<Single, Edge> v;

  bool is_edge() const { return std::holds_alternative<Edge>(v); }
  /// Canonical witness: the CCW-first point.
  Point2 first() const {
    if (const auto* s = std::get_if<Single>(&v)) return s->p;
    return std::get<Edge>(v).from;
  }
};

/// Intersection of the body with its unique supporting line of direction
/// `alpha` (line direction; the outward normal is alpha - pi/2).
inline ExtremeSet extreme_set(const ConvexBody& H, Direction alpha) {
  Vec2 n = outward_normal(alpha);
  if (const auto* p = std::get_if<Polygon>(&H.rep())) {
    auto run = detail::extreme_run(p->vertices, n, kTol);
    std::size_t nv = p->vertices.size();
    if (run.count == 1) return {ExtremeSet::Single{p->vertices[run.first]}};
    return {ExtremeSet::Edge{p->vertices[run.first], p->vertices[(run.first + run.count - 1) % nv]}};
  }
  if (const auto* s = std::get_if<Segment>(&H.rep())) {
    double da = dot(s->a - Point2{}, n), db = dot(s->b - Point2{}, n);
    if (std::fabs(da - db) <= kTol) {
      // The supporting line contains the segment; orient the face along alpha.
      return dot(s->b - s->a, alpha.unit()) > 0.0 ? ExtremeSet{ExtremeSet::Edge{s->a, s->b}}
                                                  : ExtremeSet{ExtremeSet::Edge{s->b, s->a}};
    }
    return {ExtremeSet::Single{da > db ? s->a : s->b}};
  }
  return {ExtremeSet::Single{H.extreme_point(Direction::of_vector(n))}};
}

enum class Containment { Interior, Boundary, Outside };

inline Containment contains(const ConvexBody& H, Point2 X, double tol = kTol) {
  if (const auto* p = std::get_if<Polygon>(&H.rep())) {
    double m = std::numeric_limits<double>::infinity();
    std::size_t n = p->vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      Point2 a = p->vertices[i], b = p->vertices[(i + 1) % n];
      m = std::min(m, cross(normalized(b - a), X - a));
    }
    if (m > tol) return Containment::Interior;
    if (m >= -tol) return Containment::Boundary;
    return Containment::Outside;
  }
  if (const auto* c = std::get_if<Disc>(&H.rep())) {
    double m = c->radius - distance(X, c->center);
    if (m > tol) return Containment::Interior;
    if (m >= -tol) return Containment::Boundary;
    return Containment::Outside;
  }
  if (const auto* s = std::get_if<Segment>(&H.rep())) {
    double d = distance(X, point_segment_closest(X, s->a, s->b).first);
    return d <= tol ? Containment::Boundary : Containment::Outside;
  }
  if (const auto* q = std::get_if<SinglePoint>(&H.rep()))
    return distance(X, q->p) <= tol ? Containment::Boundary : Containment::Outside;

  // Generic: minimum supporting-halfplane margin over normal directions,
  // located by a coarse scan and sharpened by golden-section refinement so
  // boundary points classify correctly at tol.
  auto margin = [&](double theta) {
    Direction d(theta);
    return H.support(d) - dot(X - Point2{}, d.unit());
  };
  const int probes = 256;
  double best_theta = 0.0;
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < probes; ++i) {
    double theta = -kPi + kTwoPi * i / probes;
    double g = margin(theta);
    if (g < m) {
      m = g;
      best_theta = theta;
    }
  }
  double lo = best_theta - kTwoPi / probes, hi = best_theta + kTwoPi / probes;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
  for (int i = 0; i < 80; ++i) {
    if (margin(a) < margin(b)) {
      hi = b;
      b = a;
      a = hi - gr * (hi - lo);
    } else {
      lo = a;
      a = b;
      b = lo + gr * (hi - lo);
    }
  }
  m = std::min(m, margin(0.5 * (lo + hi)));
  if (m > tol) return Containment::Interior;
  if (m >= -tol) return Containment::Boundary;
  return Containment::Outside;
}

/// Unique boundary point on the ray from interior point O with direction d.
inline Point2 ray_boundary_hit(const ConvexBody& H, Point2 O, Direction d) {
  if (!H.has_interior() || contains(H, O) != Containment::Interior)
    throw Error(Errc::InteriorRequired, "ray origin must be interior to the body");
  Vec2 u = d.unit();
  if (const auto* p = std::get_if<Polygon>(&H.rep())) {
    std::size_t n = p->vertices.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      Point2 a = p->vertices[i], b = p->vertices[(i + 1) % n];
      Vec2 e = b - a;
      double denom = cross(u, e);
      if (denom == 0.0) continue;  // ray parallel to edge
      double t = cross(a - O, e) / denom;
      double s = cross(a - O, u) / denom;
      if (t > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) best = std::min(best, t);
    }
    assert(std::isfinite(best));
    return O + best * u;
  }
  if (const auto* c = std::get_if<Disc>(&H.rep())) {
    Vec2 oc = O - c->center;
    double b = dot(oc, u);
    double q = norm2(oc) - c->radius * c->radius;
    double t = -b + std::sqrt(b * b - q);  // q < 0 since O is interior
    return O + t * u;
  }
  // Generic: bracket the boundary along the ray, then bisect on containment.
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  while (contains(H, O + hi * u) != Containment::Outside) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 60) throw Error(Errc::InvalidBody, "generic body appears unbounded");
  }
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (contains(H, O + mid * u) == Containment::Outside)
      hi = mid;
    else
      lo = mid;
  }
  return O + 0.5 * (lo + hi) * u;
}

inline double ConvexBody::perimeter() const {
  if (const auto* p = std::get_if<Polygon>(&rep_)) {
    double s = 0.0;
    std::size_t n = p->vertices.size();
    for (std::size_t i = 0; i < n; ++i) s += distance(p->vertices[i], p->vertices[(i + 1) % n]);
    return s;
  }
  if (const auto* c = std::get_if<Disc>(&rep_)) return kTwoPi * c->radius;
  // Degenerate closed-curve convention: a segment is traversed twice.
  if (const auto* s = std::get_if<Segment>(&rep_)) return 2.0 * distance(s->a, s->b);
  if (std::holds_alternative<SinglePoint>(rep_)) return 0.0;

  // Generic: inscribed-polygon lengths with one Richardson step.
  const Generic& g = std::get<Generic>(rep_);
  auto inscribed = [&](int n) {
    double len = 0.0;
    Point2 prev = g.extreme(Direction(-kPi));
    for (int i = 1; i <= n; ++i) {
      Point2 cur = g.extreme(Direction(-kPi + kTwoPi * i / n));
      len += distance(prev, cur);
      prev = cur;
    }
    return len;
  };
  int n = 1024;
  double ln = inscribed(n);
  for (;;) {
    double l2 = inscribed(2 * n);
    if (std::fabs(l2 - ln) < 1e-9 || n >= (1 << 20)) return (4.0 * l2 - ln) / 3.0;
    ln = l2;
    n *= 2;
  }
}

/// Point on the boundary at arclength t from the canonical start (vertex 0
/// for polygons, angle 0 for discs, endpoint a for segments). For generic
/// bodies the walk is by extreme-point angle, only approximately arclength.
inline Point2 ConvexBody::boundary_point(double t) const {
  double per = perimeter();
  if (per > 0.0) {
    t = std::fmod(t, per);
    if (t < 0.0) t += per;
  }
  if (const auto* p = std::get_if<Polygon>(&rep_)) {
    std::size_t n = p->vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      Point2 a = p->vertices[i], b = p->vertices[(i + 1) % n];
      double len = distance(a, b);
      if (t <= len) return lerp(a, b, len > 0.0 ? t / len : 0.0);
      t -= len;
    }
    return p->vertices[0];
  }
  if (const auto* c = std::get_if<Disc>(&rep_)) {
    double phi = t / c->radius;
    return c->center + c->radius * Vec2{std::cos(phi), std::sin(phi)};
  }
  if (const auto* s = std::get_if<Segment>(&rep_)) {
    double len = distance(s->a, s->b);
    if (t <= len) return lerp(s->a, s->b, t / len);
    return lerp(s->b, s->a, (t - len) / len);
  }
  if (const auto* q = std::get_if<SinglePoint>(&rep_)) return q->p;
  return std::get<Generic>(rep_).extreme(Direction(per > 0.0 ? kTwoPi * t / per : 0.0));
}

inline Point2 ConvexBody::centroid() const {
  if (const auto* p = std::get_if<Polygon>(&rep_)) {
    double a = 0.0, cx = 0.0, cy = 0.0;
    std::size_t n = p->vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& u = p->vertices[i];
      const Point2& v = p->vertices[(i + 1) % n];
      double w = u.x * v.y - v.x * u.y;
      a += w;
      cx += (u.x + v.x) * w;
      cy += (u.y + v.y) * w;
    }
    a *= 0.5;
    return {cx / (6.0 * a), cy / (6.0 * a)};
  }
  if (const auto* c = std::get_if<Disc>(&rep_)) return c->center;
  if (const auto* s = std::get_if<Segment>(&rep_)) return midpoint(s->a, s->b);
  if (const auto* q = std::get_if<SinglePoint>(&rep_)) return q->p;
  // Generic: average of probe extreme points; interior by convexity.
  double sx = 0.0, sy = 0.0;
  const int probes = 64;
  for (int i = 0; i < probes; ++i) {
    Point2 e = std::get<Generic>(rep_).extreme(Direction(-kPi + kTwoPi * i / probes));
    sx += e.x;
    sy += e.y;
  }
  return {sx / probes, sy / probes};
}

}  // namespace slideturn
