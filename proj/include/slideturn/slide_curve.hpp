#pragma once

// The slide curve slcr(H): all pointed supporting lines of H viewed inside
// the cylinder R^2 x S^1, built as an explicit rectifiable simple closed
// curve with an arclength parameterization.
//
// Pieces alternate between sliding along a face (direction frozen) and
// turning at a corner (point frozen). Directions are kept "unrolled": the
// curve starts at direction coordinate 0 and ends exactly at 2*pi, which
// pins closure and winding without modular bookkeeping.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <variant>
#include <vector>

#include "slideturn/convex_body.hpp"
#include "slideturn/errors.hpp"
#include "slideturn/geom.hpp"
#include "slideturn/support_lines.hpp"

namespace slideturn {

/// Point slides along a face, direction frozen at unrolled angle psi.
struct EdgeSlide {
  Point2 from;
  Point2 to;
  double psi = 0.0;
};

/// Point frozen at a corner, direction sweeps the corner fan.
struct VertexTurn {
  Point2 at;
  double psi_from = 0.0;
  double psi_to = 0.0;
};

/// Analytic piece for discs: both components vary at constant speed 1.
struct DiscArc {
  Point2 center;
  double radius = 1.0;
  double psi_from = 0.0;
  double psi_to = 0.0;
};

/// Sampled piece for generic bodies: R^4 polyline through curve samples.
struct SampledArc {
  std::vector<Point2> points;
  std::vector<double> psis;  // unrolled, same length as points
  std::vector<double> cum;   // cumulative R^4 chord length, cum[0] = 0
};

using SlidePiece = std::variant<EdgeSlide, VertexTurn, DiscArc, SampledArc>;

namespace detail {

inline double piece_length(const SlidePiece& p) {
  if (const auto* e = std::get_if<EdgeSlide>(&p)) return distance(e->from, e->to);
  if (const auto* t = std::get_if<VertexTurn>(&p)) return t->psi_to - t->psi_from;
  if (const auto* a = std::get_if<DiscArc>(&p))
    return (a->psi_to - a->psi_from) * std::sqrt(1.0 + a->radius * a->radius);
  return std::get<SampledArc>(p).cum.back();
}

inline Vec2 disc_touch_offset(double psi, double radius) {
  return radius * outward_normal(Direction(psi));
}

}  // namespace detail

class SlideCurve {
 public:
  SlideCurve(std::vector<SlidePiece> pieces, bool closed)
      : pieces_(std::move(pieces)), closed_(closed) {
    starts_.reserve(pieces_.size() + 1);
    starts_.push_back(0.0);
    for (const SlidePiece& p : pieces_) starts_.push_back(starts_.back() + detail::piece_length(p));
    total_ = starts_.back();
  }

  const std::vector<SlidePiece>& pieces() const { return pieces_; }
  double piece_start(std::size_t i) const { return starts_[i]; }
  double piece_end(std::size_t i) const { return starts_[i + 1]; }
  double length() const { return total_; }
  bool is_closed() const { return closed_; }

  /// Total increase of the direction coordinate along the curve.
  double winding() const { return end_psi(pieces_.back()) - start_psi(pieces_.front()); }

  CylinderPoint start() const { return at_local(0, 0.0); }
  CylinderPoint end() const {
    return at_local(pieces_.size() - 1, detail::piece_length(pieces_.back()));
  }

  /// Constant-speed-within-piece evaluation; the parameter is taken modulo
  /// the total length for closed curves and clamped for fragments.
  CylinderPoint eval(double s) const {
    auto [i, local] = locate(s);
    return at_local(i, local);
  }

  /// Unrolled direction coordinate at parameter s (0 at start, 2*pi at the
  /// end of a closed curve).
  double direction_coordinate(double s) const {
    auto [i, local] = locate(s);
    const SlidePiece& p = pieces_[i];
    if (const auto* e = std::get_if<EdgeSlide>(&p)) return e->psi;
    if (const auto* t = std::get_if<VertexTurn>(&p)) return t->psi_from + local;
    if (const auto* a = std::get_if<DiscArc>(&p))
      return a->psi_from + local / std::sqrt(1.0 + a->radius * a->radius);
    const auto& sa = std::get<SampledArc>(p);
    auto [j, frac] = sampled_locate(sa, local);
    return sa.psis[j] + frac * (sa.psis[j + 1] - sa.psis[j]);
  }

  /// Planar distance travelled by the point component up to parameter s.
  double boundary_progress(double s) const {
    auto [i, local] = locate(s);
    double acc = 0.0;
    for (std::size_t k = 0; k < i; ++k) acc += piece_planar_length(pieces_[k]);
    const SlidePiece& p = pieces_[i];
    if (std::holds_alternative<EdgeSlide>(p)) acc += local;
    if (const auto* a = std::get_if<DiscArc>(&p))
      acc += a->radius * (local / std::sqrt(1.0 + a->radius * a->radius));
    if (const auto* sa = std::get_if<SampledArc>(&p)) {
      auto [j, frac] = sampled_locate(*sa, local);
      for (std::size_t k = 0; k < j; ++k) acc += distance(sa->points[k], sa->points[k + 1]);
      acc += frac * distance(sa->points[j], sa->points[j + 1]);
    }
    return acc;
  }

  /// Parameter at which the curve carries the supporting line of direction
  /// beta, at the canonical (CCW-first) witness of the touched face.
  double param_of_direction(Direction beta) const {
    double psi0 = ccw_delta(Direction(0.0), beta);
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      if (const auto* e = std::get_if<EdgeSlide>(&pieces_[i]))
        if (std::fabs(e->psi - psi0) <= 1e-9) return starts_[i];
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const SlidePiece& p = pieces_[i];
      if (const auto* t = std::get_if<VertexTurn>(&p)) {
        if (psi0 >= t->psi_from - 1e-12 && psi0 <= t->psi_to + 1e-12)
          return starts_[i] + std::clamp(psi0 - t->psi_from, 0.0, t->psi_to - t->psi_from);
      } else if (const auto* a = std::get_if<DiscArc>(&p)) {
        if (psi0 >= a->psi_from - 1e-12 && psi0 <= a->psi_to + 1e-12)
          return starts_[i] + std::clamp(psi0 - a->psi_from, 0.0, a->psi_to - a->psi_from) *
                                  std::sqrt(1.0 + a->radius * a->radius);
      } else if (const auto* sa = std::get_if<SampledArc>(&p)) {
        for (std::size_t j = 0; j + 1 < sa->psis.size(); ++j)
          if (psi0 >= sa->psis[j] - 1e-12 && psi0 <= sa->psis[j + 1] + 1e-12) {
            double span = sa->psis[j + 1] - sa->psis[j];
            double frac = span > 0.0 ? (psi0 - sa->psis[j]) / span : 0.0;
            return starts_[i] + sa->cum[j] + frac * (sa->cum[j + 1] - sa->cum[j]);
          }
      }
    }
    return 0.0;  // beta == 2*pi wrap
  }

  /// Sub-path covering the counterclockwise boundary arc from A to B: it
  /// begins where the point leaves A (end of A's corner fan) and ends where
  /// it arrives at B (start of B's fan). A == B yields the whole curve.
  SlideCurve arc_restriction(Point2 A, Point2 B, double tol = kTol) const {
    if (distance(A, B) <= tol) return *this;
    double sa = locate_boundary(A, /*departure=*/true, tol);
    double sb = locate_boundary(B, /*departure=*/false, tol);
    if (sb <= sa + 1e-15) sb += total_;
    return slice(sa, sb);
  }

 private:
  static double start_psi(const SlidePiece& p) {
    if (const auto* e = std::get_if<EdgeSlide>(&p)) return e->psi;
    if (const auto* t = std::get_if<VertexTurn>(&p)) return t->psi_from;
    if (const auto* a = std::get_if<DiscArc>(&p)) return a->psi_from;
    return std::get<SampledArc>(p).psis.front();
  }

  static double end_psi(const SlidePiece& p) {
    if (const auto* e = std::get_if<EdgeSlide>(&p)) return e->psi;
    if (const auto* t = std::get_if<VertexTurn>(&p)) return t->psi_to;
    if (const auto* a = std::get_if<DiscArc>(&p)) return a->psi_to;
    return std::get<SampledArc>(p).psis.back();
  }

  std::pair<std::size_t, double> locate(double s) const {
    if (closed_) {
      s = std::fmod(s, total_);
      if (s < 0.0) s += total_;
    } else {
      s = std::clamp(s, 0.0, total_);
    }
    auto it = std::upper_bound(starts_.begin(), starts_.end(), s);
    std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - starts_.begin() - 1, 0));
    if (i >= pieces_.size()) i = pieces_.size() - 1;
    return {i, s - starts_[i]};
  }

  static std::pair<std::size_t, double> sampled_locate(const SampledArc& sa, double local) {
    auto it = std::upper_bound(sa.cum.begin(), sa.cum.end(), local);
    std::size_t j = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - sa.cum.begin() - 1, 0));
    if (j + 1 >= sa.cum.size()) j = sa.cum.size() - 2;
    double span = sa.cum[j + 1] - sa.cum[j];
    return {j, span > 0.0 ? (local - sa.cum[j]) / span : 0.0};
  }

  CylinderPoint at_local(std::size_t i, double local) const {
    // Piece endpoints evaluate to the stored endpoint data bit-for-bit;
    // closure and winding checks rely on that.
    const SlidePiece& p = pieces_[i];
    bool at_end = local >= detail::piece_length(p);
    if (const auto* e = std::get_if<EdgeSlide>(&p)) {
      if (at_end) return {e->to, Direction(e->psi)};
      double len = distance(e->from, e->to);
      return {lerp(e->from, e->to, len > 0.0 ? local / len : 0.0), Direction(e->psi)};
    }
    if (const auto* t = std::get_if<VertexTurn>(&p))
      return {t->at, Direction(at_end ? t->psi_to : t->psi_from + local)};
    if (const auto* a = std::get_if<DiscArc>(&p)) {
      double psi =
          at_end ? a->psi_to : a->psi_from + local / std::sqrt(1.0 + a->radius * a->radius);
      return {a->center + detail::disc_touch_offset(psi, a->radius), Direction(psi)};
    }
    const auto& sa = std::get<SampledArc>(p);
    if (at_end) return {sa.points.back(), Direction(sa.psis.back())};
    auto [j, frac] = sampled_locate(sa, local);
    Point2 pt = lerp(sa.points[j], sa.points[j + 1], frac);
    double psi = sa.psis[j] + frac * (sa.psis[j + 1] - sa.psis[j]);
    return {pt, Direction(psi)};
  }

  static double piece_planar_length(const SlidePiece& p) {
    if (const auto* e = std::get_if<EdgeSlide>(&p)) return distance(e->from, e->to);
    if (const auto* a = std::get_if<DiscArc>(&p)) return a->radius * (a->psi_to - a->psi_from);
    if (const auto* sa = std::get_if<SampledArc>(&p)) {
      double acc = 0.0;
      for (std::size_t k = 0; k + 1 < sa->points.size(); ++k)
        acc += distance(sa->points[k], sa->points[k + 1]);
      return acc;
    }
    return 0.0;
  }

  double locate_boundary(Point2 P, bool departure, double tol) const {
    // Corner fans first: a vertex is also an endpoint of its edges.
    if (departure) {
      for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (const auto* t = std::get_if<VertexTurn>(&pieces_[i]))
          if (distance(t->at, P) <= tol) return starts_[i + 1] >= total_ ? 0.0 : starts_[i + 1];
    } else {
      for (std::size_t i = pieces_.size(); i-- > 0;)
        if (const auto* t = std::get_if<VertexTurn>(&pieces_[i]))
          if (distance(t->at, P) <= tol) return starts_[i];
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const SlidePiece& p = pieces_[i];
      if (const auto* e = std::get_if<EdgeSlide>(&p)) {
        auto [q, t] = point_segment_closest(P, e->from, e->to);
        if (distance(P, q) <= tol) return starts_[i] + t * distance(e->from, e->to);
      } else if (const auto* a = std::get_if<DiscArc>(&p)) {
        if (std::fabs(distance(P, a->center) - a->radius) <= tol) {
          Direction theta = Direction::of_vector(P - a->center).rotated(kPi / 2.0);
          double psi = a->psi_from + ccw_delta(Direction(a->psi_from), theta);
          if (psi <= a->psi_to + 1e-9)
            return starts_[i] + (psi - a->psi_from) * std::sqrt(1.0 + a->radius * a->radius);
        }
      } else if (const auto* sa = std::get_if<SampledArc>(&p)) {
        for (std::size_t j = 0; j + 1 < sa->points.size(); ++j) {
          auto [q, t] = point_segment_closest(P, sa->points[j], sa->points[j + 1]);
          if (distance(P, q) <= tol)
            return starts_[i] + sa->cum[j] + t * (sa->cum[j + 1] - sa->cum[j]);
        }
      }
    }
    throw Error(Errc::NotOnBoundary, "point not on the boundary of the sliding body");
  }

  static SlidePiece slice_piece(const SlidePiece& p, double lf, double lt) {
    if (const auto* e = std::get_if<EdgeSlide>(&p)) {
      double len = distance(e->from, e->to);
      return EdgeSlide{lerp(e->from, e->to, lf / len), lerp(e->from, e->to, lt / len), e->psi};
    }
    if (const auto* t = std::get_if<VertexTurn>(&p))
      return VertexTurn{t->at, t->psi_from + lf, t->psi_from + lt};
    if (const auto* a = std::get_if<DiscArc>(&p)) {
      double speed = std::sqrt(1.0 + a->radius * a->radius);
      return DiscArc{a->center, a->radius, a->psi_from + lf / speed, a->psi_from + lt / speed};
    }
    const auto& sa = std::get<SampledArc>(p);
    SampledArc out;
    auto [j0, f0] = sampled_locate(sa, lf);
    auto [j1, f1] = sampled_locate(sa, lt);
    out.points.push_back(lerp(sa.points[j0], sa.points[j0 + 1], f0));
    out.psis.push_back(sa.psis[j0] + f0 * (sa.psis[j0 + 1] - sa.psis[j0]));
    for (std::size_t j = j0 + 1; j <= j1; ++j) {
      out.points.push_back(sa.points[j]);
      out.psis.push_back(sa.psis[j]);
    }
    out.points.push_back(lerp(sa.points[j1], sa.points[j1 + 1], f1));
    out.psis.push_back(sa.psis[j1] + f1 * (sa.psis[j1 + 1] - sa.psis[j1]));
    out.cum.assign(1, 0.0);
    for (std::size_t j = 0; j + 1 < out.points.size(); ++j) {
      Vec2 dp = out.points[j + 1] - out.points[j];
      Vec2 dd = Direction(out.psis[j + 1]).unit() - Direction(out.psis[j]).unit();
      out.cum.push_back(out.cum.back() + std::sqrt(norm2(dp) + norm2(dd)));
    }
    return out;
  }

  SlideCurve slice(double sa, double sb) const {
    std::vector<SlidePiece> out;
    double s = sa;
    while (s < sb - 1e-15) {
      double sm = std::fmod(s, total_);
      if (sm < 0.0) sm += total_;
      auto [i, local] = locate(sm);
      double avail = detail::piece_length(pieces_[i]) - local;
      if (avail <= 1e-15) {
        s += avail > 0.0 ? avail : 1e-15;
        continue;
      }
      double take = std::min(avail, sb - s);
      out.push_back(slice_piece(pieces_[i], local, local + take));
      s += take;
    }
    return SlideCurve(std::move(out), /*closed=*/false);
  }

  std::vector<SlidePiece> pieces_;
  std::vector<double> starts_;
  double total_ = 0.0;
  bool closed_ = true;
};

namespace detail {

/// Shared builder for polygon- and segment-shaped rings: `ring` lists the
/// corner chain counterclockwise, edge i running from ring[i] to ring[i+1].
inline std::vector<SlidePiece> build_ring_pieces(const std::vector<Point2>& ring) {
  std::size_t n = ring.size();
  std::vector<Direction> phi(n);
  for (std::size_t i = 0; i < n; ++i)
    phi[i] = Direction::of_vector(ring[(i + 1) % n] - ring[i]);

  // Locate the canonical start: direction 0 lies on edge k or inside the
  // corner fan of vertex k.
  std::size_t k = n;
  bool edge_start = false;
  for (std::size_t i = 0; i < n; ++i)
    if (std::fabs(phi[i].theta) <= 1e-12) {
      k = i;
      edge_start = true;
      break;
    }
  if (!edge_start) {
    for (std::size_t i = 0; i < n; ++i) {
      Direction in = phi[(i + n - 1) % n];
      if (ccw_delta(in, Direction(0.0)) < ccw_delta(in, phi[i])) {
        k = i;
        break;
      }
    }
  }
  assert(k < n);

  std::vector<SlidePiece> pieces;
  auto push_turn = [&](Point2 at, double from, double to) {
    if (to - from > 1e-15) pieces.push_back(VertexTurn{at, from, to});
  };
  auto push_slide = [&](Point2 from, Point2 to, double psi) {
    if (distance(from, to) > 1e-15) pieces.push_back(EdgeSlide{from, to, psi});
  };

  double psi = 0.0;
  if (!edge_start) {
    double d0 = ccw_delta(Direction(0.0), phi[k]);
    push_turn(ring[k], 0.0, d0);
    psi = d0;
  }
  push_slide(ring[k], ring[(k + 1) % n], psi);
  for (std::size_t j = 1; j < n; ++j) {
    std::size_t i = (k + j) % n;
    double ext = ccw_delta(phi[(i + n - 1) % n], phi[i]);
    push_turn(ring[i], psi, psi + ext);
    psi += ext;
    push_slide(ring[i], ring[(i + 1) % n], psi);
  }
  // Close the final corner fan at exactly one full turn.
  push_turn(ring[k], std::min(psi, kTwoPi), kTwoPi);
  return pieces;
}

inline SampledArc build_sampled_arc(const Generic& g, int resolution) {
  auto build = [&](int m) {
    SampledArc arc;
    arc.points.reserve(m + 1);
    arc.psis.reserve(m + 1);
    for (int j = 0; j <= m; ++j) {
      double psi = kTwoPi * j / m;
      arc.points.push_back(g.extreme(Direction(psi - kPi / 2.0)));
      arc.psis.push_back(psi);
    }
    arc.points.back() = arc.points.front();  // closure
    arc.cum.assign(1, 0.0);
    for (int j = 0; j < m; ++j) {
      Vec2 dp = arc.points[j + 1] - arc.points[j];
      Vec2 dd = Direction(arc.psis[j + 1]).unit() - Direction(arc.psis[j]).unit();
      arc.cum.push_back(arc.cum.back() + std::sqrt(norm2(dp) + norm2(dd)));
    }
    return arc;
  };
  int m = std::max(64, resolution);
  SampledArc arc = build(m);
  while (m < (1 << 20)) {
    SampledArc next = build(2 * m);
    if (std::fabs(next.cum.back() - arc.cum.back()) < 1e-9) return next;
    arc = std::move(next);
    m *= 2;
  }
  return arc;
}

}  // namespace detail

/// Builds slcr(H). Exact pieces for polygons, segments, points and discs;
/// generic bodies get a refined sampled arc (`resolution` is the initial
/// sample count).
inline SlideCurve slide_curve(const ConvexBody& H, int resolution = 4096) {
  if (const auto* p = std::get_if<Polygon>(&H.rep()))
    return SlideCurve(detail::build_ring_pieces(p->vertices), true);
  if (const auto* c = std::get_if<Disc>(&H.rep()))
    return SlideCurve({DiscArc{c->center, c->radius, 0.0, kTwoPi}}, true);
  if (const auto* s = std::get_if<Segment>(&H.rep()))
    return SlideCurve(detail::build_ring_pieces({s->a, s->b}), true);
  if (const auto* q = std::get_if<SinglePoint>(&H.rep()))
    return SlideCurve({VertexTurn{q->p, 0.0, kTwoPi}}, true);
  return SlideCurve({detail::build_sampled_arc(std::get<Generic>(H.rep()), resolution)}, true);
}

}  // namespace slideturn
