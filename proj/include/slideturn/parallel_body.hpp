#pragma once

// Parallel (offset) bodies: H^(r) collects all points at distance <= r from
// H. Its boundary and the slide curve of H are in bijection through a pair
// of reciprocal maps, certified Lipschitz in the small empirically.

#include <cmath>
#include <random>
#include <variant>
#include <vector>

#include "slideturn/convex_body.hpp"
#include "slideturn/errors.hpp"
#include "slideturn/geom.hpp"
#include "slideturn/slide_curve.hpp"
#include "slideturn/support_lines.hpp"

namespace slideturn {

/// Straight stretch of the offset boundary (an edge pushed out by r).
struct OffsetEdge {
  Point2 from;
  Point2 to;
};

/// Circular stretch around a source corner; angles are outward-normal
/// angles, swept counterclockwise.
struct CornerArc {
  Point2 center;
  double radius = 1.0;
  double a0 = 0.0;
  double a1 = 0.0;
};

using ParallelPiece = std::variant<OffsetEdge, CornerArc>;

class ParallelBody {
 public:
  ParallelBody(ConvexBody source, double r, std::vector<ParallelPiece> pieces)
      : source_(std::move(source)), r_(r), pieces_(std::move(pieces)) {
    starts_.push_back(0.0);
    for (const ParallelPiece& p : pieces_) starts_.push_back(starts_.back() + piece_length(p));
    // Generic sources carry no explicit pieces; the perimeter law
    // perim(H^(r)) = perim(H) + 2*pi*r holds for every convex source.
    perimeter_ = pieces_.empty() ? source_.perimeter() + kTwoPi * r_ : starts_.back();
  }

  const ConvexBody& source() const { return source_; }
  double radius() const { return r_; }
  const std::vector<ParallelPiece>& pieces() const { return pieces_; }

  double perimeter() const { return perimeter_; }

  Point2 boundary_point(double t) const {
    double per = perimeter();
    t = std::fmod(t, per);
    if (t < 0.0) t += per;
    if (pieces_.empty())  // generic source: walk by outward-normal angle
      return as_body().boundary_point(t);
    auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
    std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - starts_.begin() - 1, 0));
    if (i >= pieces_.size()) i = pieces_.size() - 1;
    double local = t - starts_[i];
    if (const auto* e = std::get_if<OffsetEdge>(&pieces_[i])) {
      double len = distance(e->from, e->to);
      return lerp(e->from, e->to, len > 0.0 ? local / len : 0.0);
    }
    const auto& a = std::get<CornerArc>(pieces_[i]);
    double ang = a.a0 + local / a.radius;
    return a.center + a.radius * Vec2{std::cos(ang), std::sin(ang)};
  }

  /// Arclength position of a boundary point; errors when P is not on the
  /// offset boundary within tol. For generic sources the position is
  /// angle-proportional rather than true arclength.
  double boundary_param(Point2 P, double tol = kTol) const {
    if (pieces_.empty()) {
      Point2 nearest = closest_point_on_body(source_, P);
      if (std::fabs(distance(P, nearest) - r_) > tol)
        throw Error(Errc::NotOnParallelBoundary, "point not on the parallel boundary");
      Direction n = Direction::of_vector(P - nearest);
      return ccw_delta(Direction(0.0), n) / kTwoPi * perimeter();
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (const auto* e = std::get_if<OffsetEdge>(&pieces_[i])) {
        auto [q, t] = point_segment_closest(P, e->from, e->to);
        if (distance(P, q) <= tol) return starts_[i] + t * distance(e->from, e->to);
      } else {
        const auto& a = std::get<CornerArc>(pieces_[i]);
        if (std::fabs(distance(P, a.center) - a.radius) <= tol) {
          double ang = a.a0 + ccw_delta(Direction(a.a0), Direction::of_vector(P - a.center));
          if (ang <= a.a1 + 1e-9) return starts_[i] + (ang - a.a0) * a.radius;
        }
      }
    }
    throw Error(Errc::NotOnParallelBoundary, "point not on the parallel boundary");
  }

  /// The parallel body as a convex body in its own right; its support
  /// function is the source's plus r.
  ConvexBody as_body() const {
    ConvexBody src = source_;
    double r = r_;
    return ConvexBody::generic(
        [src, r](Direction d) { return src.support(d) + r; },
        [src, r](Direction d) { return src.extreme_point(d) + r * d.unit(); });
  }

 private:
  static double piece_length(const ParallelPiece& p) {
    if (const auto* e = std::get_if<OffsetEdge>(&p)) return distance(e->from, e->to);
    const auto& a = std::get<CornerArc>(p);
    return (a.a1 - a.a0) * a.radius;
  }

  ConvexBody source_;
  double r_;
  std::vector<ParallelPiece> pieces_;
  std::vector<double> starts_;
  double perimeter_ = 0.0;
};

namespace detail {

inline std::vector<ParallelPiece> offset_ring_pieces(const std::vector<Point2>& ring, double r) {
  std::size_t n = ring.size();
  std::vector<ParallelPiece> pieces;
  std::vector<double> normal_angle(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 e = ring[(i + 1) % n] - ring[i];
    normal_angle[i] = Direction::of_vector(rot90cw(normalized(e))).theta;
  }
  // Unrolled sweep of outward-normal angles; arcs make up exactly 2*pi.
  double ang = normal_angle[0];
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 m = Direction(normal_angle[i]).unit();
    pieces.push_back(OffsetEdge{ring[i] + r * m, ring[(i + 1) % n] + r * m});
    double next = i + 1 < n ? ang + ccw_delta(Direction(normal_angle[i]),
                                              Direction(normal_angle[(i + 1) % n]))
                            : normal_angle[0] + kTwoPi;
    pieces.push_back(CornerArc{ring[(i + 1) % n], r, ang, next});
    ang = next;
  }
  return pieces;
}

}  // namespace detail

/// The parallel body H^(r) = { P : dist(P, H) <= r }.
inline ParallelBody parallel_body(const ConvexBody& H, double r) {
  if (!(r > 0.0)) throw Error(Errc::InvalidBody, "parallel radius must be positive");
  if (const auto* p = std::get_if<Polygon>(&H.rep()))
    return ParallelBody(H, r, detail::offset_ring_pieces(p->vertices, r));
  if (const auto* c = std::get_if<Disc>(&H.rep()))
    return ParallelBody(H, r, {CornerArc{c->center, c->radius + r, 0.0, kTwoPi}});
  if (const auto* s = std::get_if<Segment>(&H.rep()))
    return ParallelBody(H, r, detail::offset_ring_pieces({s->a, s->b}, r));
  if (const auto* q = std::get_if<SinglePoint>(&H.rep()))
    return ParallelBody(H, r, {CornerArc{q->p, r, 0.0, kTwoPi}});
  return ParallelBody(H, r, {});  // generic source: pieces stay implicit
}

/// Slide curve to offset boundary: a slide-curve point is pushed out by r along
/// the outward normal of its supporting line, landing on the boundary of
/// H^(r).
inline Point2 slide_to_boundary(const ConvexBody& H, const CylinderPoint& q, double r = 1.0) {
  if (contains(H, q.point) != Containment::Boundary ||
      !is_supporting(DirectedLine{q.point, q.dir}, H))
    throw Error(Errc::NotOnSlideCurve, "pair is not a pointed supporting line of the body");
  return q.point + r * outward_normal(q.dir);
}

/// Offset boundary to slide curve: a boundary point of H^(r) projects to its unique
/// nearest point of H; the supporting direction is perpendicular to the
/// connecting segment.
inline CylinderPoint boundary_to_slide(const ConvexBody& H, Point2 P, double r = 1.0,
                                       double tol = kTol) {
  Point2 nearest = closest_point_on_body(H, P);
  double d = distance(P, nearest);
  if (std::fabs(d - r) > tol)
    throw Error(Errc::NotOnParallelBoundary, "point is not at distance r from the body");
  Direction dir = Direction::of_vector(P - nearest).rotated(kPi / 2.0);
  return {nearest, dir};
}

/// Empirical certificate that the two boundary maps are Lipschitz in the
/// small with witnesses delta = 1/5 and L = 9.
struct LipschitzReport {
  double delta = 0.2;
  double bound = 9.0;
  int f_pairs = 0;
  int g_pairs = 0;
  double max_f_ratio = 0.0;
  double max_g_ratio = 0.0;
  bool passed = false;
};

inline LipschitzReport lipschitz_small_certificate(const ConvexBody& H, int samples,
                                                   unsigned seed = 0x51edu) {
  if (!H.has_interior())
    throw Error(Errc::DegenerateBody, "certificate requires a nonempty interior");
  LipschitzReport rep;
  ParallelBody pb = parallel_body(H, 1.0);
  SlideCurve sc = slide_curve(H);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double per = pb.perimeter();
  while (rep.f_pairs < samples) {
    double t = unit(rng) * per;
    double t2 = t + (unit(rng) - 0.5) * 2.0 * rep.delta;
    Point2 P = pb.boundary_point(t);
    Point2 Q = pb.boundary_point(t2);
    double gamma = distance(P, Q);
    if (gamma > rep.delta || gamma < 1e-9) continue;
    CylinderPoint fP = boundary_to_slide(H, P, 1.0, 1e-6);
    CylinderPoint fQ = boundary_to_slide(H, Q, 1.0, 1e-6);
    rep.max_f_ratio = std::max(rep.max_f_ratio, euclid4(fP, fQ) / gamma);
    ++rep.f_pairs;
  }

  double len = sc.length();
  while (rep.g_pairs < samples) {
    double s = unit(rng) * len;
    double s2 = s + (unit(rng) - 0.5) * 2.0 * rep.delta;
    CylinderPoint a = sc.eval(s);
    CylinderPoint b = sc.eval(s2);
    double gamma = euclid4(a, b);
    if (gamma > rep.delta || gamma < 1e-9) continue;
    Point2 ga = slide_to_boundary(H, a);
    Point2 gb = slide_to_boundary(H, b);
    rep.max_g_ratio = std::max(rep.max_g_ratio, distance(ga, gb) / gamma);
    ++rep.g_pairs;
  }

  rep.passed = rep.max_f_ratio <= rep.bound && rep.max_g_ratio <= rep.bound;
  return rep;
}

}  // namespace slideturn
