#pragma once

// Common supporting lines: slide-turn a pointed supporting line of H1 through
// one full turn and extract the four common supporting lines with H2.
//
// The directed line is constant while the point slides along a face, so
// side changes happen only while turning. For polygon and disc data the
// event angles have closed forms (lines through a vertex of H2, or at a
// prescribed signed distance from a disc center); everything else falls
// back to a scan-and-bisect sweep.

#include <array>
#include <cmath>
#include <vector>

#include "slideturn/convex_body.hpp"
#include "slideturn/errors.hpp"
#include "slideturn/geom.hpp"
#include "slideturn/slide_curve.hpp"
#include "slideturn/support_lines.hpp"

namespace slideturn {

enum class SideClass { Left, Right, Crossing, Touching };

inline const char* side_name(SideClass s) {
  switch (s) {
    case SideClass::Left: return "Left";
    case SideClass::Right: return "Right";
    case SideClass::Crossing: return "Crossing";
    case SideClass::Touching: return "Touching";
  }
  return "?";
}

/// Classifies a body against a directed line from its two support values.
inline SideClass side_of(const DirectedLine& l, const ConvexBody& H, double tol = kTol) {
  SideRange r = side_range(l, H);
  if (r.min_side > tol) return SideClass::Left;
  if (r.max_side < -tol) return SideClass::Right;
  if (r.min_side < -tol && r.max_side > tol) return SideClass::Crossing;
  return SideClass::Touching;
}

enum class TangentKind { RightToTouch, TouchToLeft, LeftToTouch, TouchToRight };

inline const char* tangent_kind_name(TangentKind k) {
  switch (k) {
    case TangentKind::RightToTouch: return "RightToTouch";
    case TangentKind::TouchToLeft: return "TouchToLeft";
    case TangentKind::LeftToTouch: return "LeftToTouch";
    case TangentKind::TouchToRight: return "TouchToRight";
  }
  return "?";
}

struct TangentEvent {
  double param = 0.0;  // slide parameter measured from the sweep origin
  DirectedLine line;
  Point2 touch1;  // on the boundary of H1
  Point2 touch2;  // on the boundary of H2
  TangentKind kind = TangentKind::RightToTouch;
};

struct CommonTangentReport {
  std::array<TangentEvent, 4> events;
  DirectedLine separator;
  double sweep_origin = 0.0;  // absolute slide parameter of the start
  double curve_length = 0.0;
};

namespace detail {

struct TangentCandidate {
  double param = 0.0;  // absolute slide parameter
  DirectedLine line;
  Point2 touch1;
};

/// Solves dot(m(psi), A) = rhs for the left normal m(psi) = (-sin, cos);
/// returns 0..2 canonical angles.
inline std::vector<double> solve_normal_eq(Vec2 A, double rhs) {
  double R = norm(A);
  std::vector<double> out;
  if (R < 1e-300 || std::fabs(rhs) > R) return out;
  double phi = std::atan2(-A.x, A.y);
  double off = std::acos(std::clamp(rhs / R, -1.0, 1.0));
  out.push_back(canonical_angle(phi + off));
  if (off > 0.0 && off < kPi) out.push_back(canonical_angle(phi - off));
  return out;
}

/// Unrolls a canonical angle into [from - slack, to + slack].
inline std::vector<double> unroll_into(double canonical, double from, double to,
                                       double slack = 1e-12) {
  std::vector<double> out;
  double base = canonical + kTwoPi * std::floor((from - slack - canonical) / kTwoPi);
  for (double psi = base; psi <= to + slack; psi += kTwoPi)
    if (psi >= from - slack) out.push_back(std::clamp(psi, from, to));
  return out;
}

inline std::vector<Point2> corner_points(const ConvexBody& H) {
  if (const auto* p = std::get_if<Polygon>(&H.rep())) return p->vertices;
  if (const auto* s = std::get_if<Segment>(&H.rep())) return {s->a, s->b};
  if (const auto* q = std::get_if<SinglePoint>(&H.rep())) return {q->p};
  return {};
}

/// Tangency angles of the turning line through a fixed pivot against H2.
/// `pivot_radius` > 0 treats the pivot as a disc arc of that radius (the
/// line stays at distance pivot_radius on its right).
inline std::vector<double> turning_event_angles(Point2 pivot, double pivot_radius,
                                                const ConvexBody& H2) {
  std::vector<double> psis;
  if (const auto* d2 = std::get_if<Disc>(&H2.rep())) {
    Vec2 A = d2->center - pivot;
    for (double rhs : {-(pivot_radius + d2->radius), d2->radius - pivot_radius})
      for (double psi : solve_normal_eq(A, rhs)) psis.push_back(psi);
    return psis;
  }
  std::vector<Point2> ws = corner_points(H2);
  if (!ws.empty()) {
    for (const Point2& w : ws)
      for (double psi : solve_normal_eq(w - pivot, -pivot_radius)) psis.push_back(psi);
    return psis;
  }
  return psis;  // generic H2: handled by the scanning fallback
}

inline double gap_max(const SlideCurve& sc, const ConvexBody& H2, double s) {
  CylinderPoint q = sc.eval(s);
  return side_range(DirectedLine{q.point, q.dir}, H2).max_side;
}

inline double gap_min(const SlideCurve& sc, const ConvexBody& H2, double s) {
  CylinderPoint q = sc.eval(s);
  return side_range(DirectedLine{q.point, q.dir}, H2).min_side;
}

template <typename F>
inline double bisect_root(F&& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 100; ++i) {
    double mid = 0.5 * (lo + hi);
    if ((f(mid) <= 0.0) == (flo <= 0.0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Scanning fallback: bracket sign changes of both gap functions on a
/// parameter window and bisect them to ~1e-10.
inline void scan_events(const SlideCurve& sc, const ConvexBody& H2, double s0, double s1,
                        std::vector<TangentCandidate>& out) {
  int steps = std::max(8, static_cast<int>(std::ceil((s1 - s0) / 2e-3)));
  auto add_root = [&](double s) {
    CylinderPoint q = sc.eval(s);
    out.push_back({s, DirectedLine{q.point, q.dir}, q.point});
  };
  double prev_max = gap_max(sc, H2, s0), prev_min = gap_min(sc, H2, s0);
  for (int i = 1; i <= steps; ++i) {
    double s = s0 + (s1 - s0) * i / steps;
    double cur_max = gap_max(sc, H2, s), cur_min = gap_min(sc, H2, s);
    double sp = s0 + (s1 - s0) * (i - 1) / steps;
    if ((prev_max <= 0.0) != (cur_max <= 0.0))
      add_root(bisect_root([&](double t) { return gap_max(sc, H2, t); }, sp, s));
    if ((prev_min <= 0.0) != (cur_min <= 0.0))
      add_root(bisect_root([&](double t) { return gap_min(sc, H2, t); }, sp, s));
    prev_max = cur_max;
    prev_min = cur_min;
  }
}

}  // namespace detail

/// Side classification of the sliding supporting line of H1 against H2 at
/// `steps` evenly spaced parameters, replaying the continuity argument.
struct SweepHistogram {
  long left = 0;
  long right = 0;
  long crossing = 0;
  long touching = 0;
  int transitions = 0;
  bool pattern_ok = false;
};

CommonTangentReport common_supporting_lines(const ConvexBody& H1, const ConvexBody& H2);

inline SweepHistogram tangent_count_sweep(const ConvexBody& H1, const ConvexBody& H2, int steps) {
  if (!H1.has_interior() || !H2.has_interior())
    throw Error(Errc::DegenerateBody, "both bodies need a nonempty interior");
  DirectedLine sep = separating_line(H1, H2);  // throws NotDisjoint when needed
  SlideCurve sc = slide_curve(H1);
  double t0 = sc.param_of_direction(sep.dir);
  double L = sc.length();

  SweepHistogram h;
  std::vector<SideClass> states;
  states.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    CylinderPoint q = sc.eval(t0 + L * i / steps);
    SideClass s = side_of(DirectedLine{q.point, q.dir}, H2);
    switch (s) {
      case SideClass::Left: ++h.left; break;
      case SideClass::Right: ++h.right; break;
      case SideClass::Crossing: ++h.crossing; break;
      case SideClass::Touching: ++h.touching; break;
    }
    states.push_back(s);
  }
  // Compress the cyclic sequence ignoring measure-zero touching samples.
  std::vector<SideClass> runs;
  for (SideClass s : states) {
    if (s == SideClass::Touching) continue;
    if (runs.empty() || runs.back() != s) runs.push_back(s);
  }
  while (runs.size() > 1 && runs.front() == runs.back()) runs.pop_back();
  h.transitions = static_cast<int>(runs.size() > 1 ? runs.size() : 0);
  h.pattern_ok = runs.size() == 4 && runs[0] == SideClass::Right &&
                 runs[1] == SideClass::Crossing && runs[2] == SideClass::Left &&
                 runs[3] == SideClass::Crossing;
  return h;
}

inline CommonTangentReport common_supporting_lines(const ConvexBody& H1, const ConvexBody& H2) {
  if (!H1.has_interior() || !H2.has_interior())
    throw Error(Errc::DegenerateBody, "both bodies need a nonempty interior");
  DirectedLine sep = separating_line(H1, H2);  // throws NotDisjoint when needed

  SlideCurve sc = slide_curve(H1);
  double L = sc.length();
  double t0 = sc.param_of_direction(sep.dir);

  // Candidate tangency parameters per piece.
  std::vector<detail::TangentCandidate> cands;
  const auto& pieces = sc.pieces();
  bool generic2 = H2.is_generic();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    double s_lo = sc.piece_start(i), s_hi = sc.piece_end(i);
    if (const auto* e = std::get_if<EdgeSlide>(&pieces[i])) {
      DirectedLine l{e->from, Direction(e->psi)};
      if (side_of(l, H2) == SideClass::Touching) cands.push_back({s_lo, l, e->from});
      continue;
    }
    if (generic2 || std::holds_alternative<SampledArc>(pieces[i])) {
      detail::scan_events(sc, H2, s_lo, s_hi, cands);
      continue;
    }
    if (const auto* t = std::get_if<VertexTurn>(&pieces[i])) {
      for (double psi_c : detail::turning_event_angles(t->at, 0.0, H2))
        for (double psi : detail::unroll_into(psi_c, t->psi_from, t->psi_to)) {
          DirectedLine l{t->at, Direction(psi)};
          if (side_of(l, H2) == SideClass::Touching)
            cands.push_back({s_lo + (psi - t->psi_from), l, t->at});
        }
    } else if (const auto* a = std::get_if<DiscArc>(&pieces[i])) {
      double speed = std::sqrt(1.0 + a->radius * a->radius);
      for (double psi_c : detail::turning_event_angles(a->center, a->radius, H2))
        for (double psi : detail::unroll_into(psi_c, a->psi_from, a->psi_to)) {
          Point2 touch = a->center + a->radius * outward_normal(Direction(psi));
          DirectedLine l{touch, Direction(psi)};
          if (side_of(l, H2) == SideClass::Touching)
            cands.push_back({s_lo + (psi - a->psi_from) * speed, l, touch});
        }
    }
  }

  // Shift to sweep order, then collapse candidates of the same non-directed
  // line: a tangency persisting along a face run is reported at its first
  // parameter.
  struct Shifted {
    double tau;
    detail::TangentCandidate c;
  };
  std::vector<Shifted> shifted;
  for (const auto& c : cands) {
    double tau = std::fmod(c.param - t0, L);
    if (tau < 0.0) tau += L;
    shifted.push_back({tau, c});
  }
  std::sort(shifted.begin(), shifted.end(),
            [](const Shifted& a, const Shifted& b) { return a.tau < b.tau; });
  std::vector<Shifted> reps;
  for (const auto& s : shifted) {
    bool merged = false;
    for (auto& r : reps)
      if (line_gap(r.c.line, s.c.line) <= 1e-6) {
        merged = true;  // keep the earlier parameter
        break;
      }
    if (!merged) reps.push_back(s);
  }

  if (reps.size() != 4)
    throw Error(Errc::InvalidBody, "tangent sweep did not isolate exactly four events");

  // Verify the side pattern between events and assemble the report.
  static const SideClass expected[4] = {SideClass::Crossing, SideClass::Left,
                                        SideClass::Crossing, SideClass::Right};
  static const TangentKind kinds[4] = {TangentKind::RightToTouch, TangentKind::TouchToLeft,
                                       TangentKind::LeftToTouch, TangentKind::TouchToRight};
  CommonTangentReport rep;
  rep.separator = sep;
  rep.sweep_origin = t0;
  rep.curve_length = L;
  for (int i = 0; i < 4; ++i) {
    double next_tau = i + 1 < 4 ? reps[i + 1].tau : reps[0].tau + L;
    double mid = 0.5 * (reps[i].tau + next_tau);
    CylinderPoint q = sc.eval(t0 + mid);
    SideClass s = side_of(DirectedLine{q.point, q.dir}, H2);
    if (s != expected[i] && s != SideClass::Touching)
      throw Error(Errc::InvalidBody, "tangent sweep produced an inconsistent side pattern");

    TangentEvent ev;
    ev.param = reps[i].tau;
    ev.line = reps[i].c.line;
    ev.touch1 = reps[i].c.touch1;
    // Touch set of H2: at inner events H2 sits right of the directed line
    // (supporting line of H2 runs opposite), at outer events it sits left.
    bool h2_right = (i == 0 || i == 3);
    ev.touch2 = extreme_set(H2, h2_right ? ev.line.dir.opposite() : ev.line.dir).first();
    ev.kind = kinds[i];
    rep.events[static_cast<std::size_t>(i)] = ev;
  }
  return rep;
}

}  // namespace slideturn
