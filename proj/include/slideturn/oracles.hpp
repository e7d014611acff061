#pragma once

// Independent brute-force references backing the randomized suites and the
// CLI self-check. Deliberately slow and obviously correct; none of them go
// through the slide-curve event machinery they are used to validate.

#include <functional>
#include <vector>

#include "slideturn/common_tangents.hpp"
#include "slideturn/convex_body.hpp"
#include "slideturn/convex_fn.hpp"
#include "slideturn/geom.hpp"
#include "slideturn/slide_curve.hpp"
#include "slideturn/support_lines.hpp"

namespace slideturn::oracles {

/// Supporting line by plain argmax of dot(p, right-normal(alpha)) over the
/// polygon vertices, or over `samples` boundary points otherwise.
inline DirectedLine brute_supporting_line(const ConvexBody& H, Direction alpha,
                                          int samples = 4096) {
  Vec2 n = outward_normal(alpha);
  Point2 best{};
  double best_dot = -std::numeric_limits<double>::infinity();
  auto consider = [&](Point2 p) {
    double d = dot(p - Point2{}, n);
    if (d > best_dot) {
      best_dot = d;
      best = p;
    }
  };
  if (const auto* p = std::get_if<Polygon>(&H.rep())) {
    for (const Point2& v : p->vertices) consider(v);
  } else if (const auto* s = std::get_if<Segment>(&H.rep())) {
    consider(s->a);
    consider(s->b);
  } else if (const auto* q = std::get_if<SinglePoint>(&H.rep())) {
    consider(q->p);
  } else {
    double per = H.perimeter();
    for (int i = 0; i < samples; ++i) consider(H.boundary_point(per * i / samples));
  }
  return {best, alpha};
}

/// Common supporting lines by scanning directions: the supporting line of H1
/// at each sampled direction is classified against H2; sign changes of the
/// two side extremes are sharpened by bisection in direction space.
inline std::vector<DirectedLine> brute_common_tangents(const ConvexBody& H1, const ConvexBody& H2,
                                                       int directions = 4096) {
  auto extremes = [&](double alpha) {
    PointedSupportingLine l = supporting_line(H1, Direction(alpha));
    return side_range(l.line, H2);
  };
  std::vector<DirectedLine> found;
  auto add = [&](double alpha) {
    DirectedLine l = supporting_line(H1, Direction(alpha)).line;
    for (const DirectedLine& g : found)
      if (line_gap(g, l) <= 1e-6) return;
    found.push_back(l);
  };
  auto bisect = [&](double lo, double hi, bool use_max) {
    double flo = use_max ? extremes(lo).max_side : extremes(lo).min_side;
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (lo + hi);
      double fm = use_max ? extremes(mid).max_side : extremes(mid).min_side;
      if ((fm <= 0.0) == (flo <= 0.0))
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  SideRange prev = extremes(-kPi);
  for (int i = 1; i <= directions; ++i) {
    double a0 = -kPi + kTwoPi * (i - 1) / directions;
    double a1 = -kPi + kTwoPi * i / directions;
    SideRange cur = extremes(a1);
    if ((prev.max_side <= 0.0) != (cur.max_side <= 0.0)) add(bisect(a0, a1, true));
    if ((prev.min_side <= 0.0) != (cur.min_side <= 0.0)) add(bisect(a0, a1, false));
    prev = cur;
  }
  return found;
}

/// Length of the inscribed R^4 polyline through N+1 samples of a curve
/// given by a [0, 1] -> cylinder sampler; nondecreasing in N.
inline double polyline_length(const std::function<CylinderPoint(double)>& sampler, int n) {
  double acc = 0.0;
  CylinderPoint prev = sampler(0.0);
  for (int i = 1; i <= n; ++i) {
    CylinderPoint cur = sampler(static_cast<double>(i) / n);
    acc += euclid4(prev, cur);
    prev = cur;
  }
  return acc;
}

/// Inscribed polyline for a slide curve with nodes pinned on every piece
/// boundary and the rest of the budget spread by length. The curve has a
/// velocity kink at each piece boundary, so a polyline that skips them
/// converges only linearly.
inline double slide_polyline_length(const SlideCurve& sc, int n) {
  double total = sc.length();
  double acc = 0.0;
  CylinderPoint prev = sc.eval(0.0);
  for (std::size_t i = 0; i < sc.pieces().size(); ++i) {
    double s0 = sc.piece_start(i), s1 = sc.piece_end(i);
    int k = std::max<int>(1, static_cast<int>(std::llround(n * (s1 - s0) / total)));
    for (int j = 1; j <= k; ++j) {
      CylinderPoint cur = sc.eval(s0 + (s1 - s0) * j / k);
      acc += euclid4(prev, cur);
      prev = cur;
    }
  }
  return acc;
}

/// Grid-search inverse of t(x, d) = x + d over D; the grid always includes
/// the breakpoints so the minimizer is exact up to the grid step.
inline DPoint grid_invert_t(const PLConvexFunction& f, double v, double s, int resolution = 1024) {
  TRange r = t_range(f, v);
  if (s < r.w1 || s > r.w2) throw Error(Errc::OutOfRange, "s outside [w1, w2]");
  std::vector<double> grid;
  for (int i = 0; i <= resolution; ++i) grid.push_back(-v + 2.0 * v * i / resolution);
  for (double b : f.breakpoints())
    if (b > -v && b < v) grid.push_back(b);
  DPoint best{0.0, 0.0};
  double best_err = std::numeric_limits<double>::infinity();
  for (double x : grid) {
    double d = f.subdifferential(x).clamp(s - x);
    double err = std::fabs(x + d - s);
    if (err < best_err) {
      best_err = err;
      best = {x, d};
    }
  }
  return best;
}

/// Largest gap from each line of `a` to its nearest line of `b` and vice
/// versa, lines compared as non-directed lines.
inline double line_set_hausdorff(const std::vector<DirectedLine>& a,
                                 const std::vector<DirectedLine>& b) {
  double worst = 0.0;
  auto one_way = [&](const std::vector<DirectedLine>& from, const std::vector<DirectedLine>& to) {
    for (const DirectedLine& l : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const DirectedLine& g : to) best = std::min(best, line_gap(l, g));
      worst = std::max(worst, best);
    }
  };
  one_way(a, b);
  one_way(b, a);
  return worst;
}

}  // namespace slideturn::oracles
