#pragma once

// Planar primitives used everywhere: angles on S^1, points, directed lines,
// and the two distance functions on the cylinder R^2 x S^1 viewed inside R^4.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace slideturn {

/// Global absolute tolerance for on/left/right classification of inexact
/// bodies. Polygon predicates stay exact where the inputs are representable.
inline constexpr double kTol = 1e-9;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 normalized(Vec2 a) {
  double n = norm(a);
  return n > 0.0 ? a / n : Vec2{0.0, 0.0};
}
inline Vec2 rot90ccw(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 rot90cw(Vec2 a) { return {a.y, -a.x}; }

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(Point2 p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
inline Point2 operator-(Point2 p, Vec2 v) { return {p.x - v.x, p.y - v.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline Point2 lerp(Point2 a, Point2 b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

/// Maps any angle to the canonical range [-pi, pi); arithmetic is mod 2pi.
inline double canonical_angle(double t) {
  double r = std::remainder(t, kTwoPi);  // lands in [-pi, pi]
  if (r == kPi) r = -kPi;
  return r == 0.0 ? 0.0 : r;  // flush -0
}

/// Angle on S^1, stored canonically in [-pi, pi).
struct Direction {
  double theta = 0.0;

  Direction() = default;
  explicit Direction(double radians) : theta(canonical_angle(radians)) {}

  static Direction of_vector(Vec2 v) { return Direction(std::atan2(v.y, v.x)); }

  /// The (cos, sin) embedding into the unit circle.
  Vec2 unit() const { return {std::cos(theta), std::sin(theta)}; }

  Direction opposite() const { return Direction(theta + kPi); }
  Direction rotated(double by) const { return Direction(theta + by); }
};

/// Counterclockwise angular distance from a to b, in [0, 2pi).
inline double ccw_delta(Direction a, Direction b) {
  double r = std::remainder(b.theta - a.theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

inline bool same_direction(Direction a, Direction b, double tol = 1e-12) {
  double d = std::fabs(std::remainder(a.theta - b.theta, kTwoPi));
  return d <= tol;
}

/// True when mid lies on the closed counterclockwise fan from a to b.
inline bool ccw_between(Direction a, Direction mid, Direction b, double tol = 0.0) {
  return ccw_delta(a, mid) <= ccw_delta(a, b) + tol;
}

/// Left (counterclockwise) unit normal of a line direction.
inline Vec2 left_normal(Direction d) { return rot90ccw(d.unit()); }

/// Right unit normal; points away from a body supported on the left.
inline Vec2 outward_normal(Direction d) { return rot90cw(d.unit()); }

/// Oriented line through `base` with direction `dir`. The left halfplane is
/// the counterclockwise side: X is Left iff cross(unit(dir), X - base) > 0.
struct DirectedLine {
  Point2 base;
  Direction dir;
};

/// Signed perpendicular distance from X to the line, positive on the left.
inline double signed_side(const DirectedLine& l, Point2 X) {
  return cross(l.dir.unit(), X - l.base);
}

/// Two directed lines coincide iff their directions match and each base lies
/// on the other line.
inline bool same_directed_line(const DirectedLine& a, const DirectedLine& b, double tol = kTol) {
  return same_direction(a.dir, b.dir, 1e-9) && std::fabs(signed_side(a, b.base)) <= tol &&
         std::fabs(signed_side(b, a.base)) <= tol;
}

/// A point of the cylinder C = R^2 x S^1; encodes (x, y, cos t, sin t) in R^4.
struct CylinderPoint {
  Point2 point;
  Direction dir;
};

/// Chord length between two angles on the embedded unit circle.
inline double s1_chord(Direction a, Direction b) { return norm(a.unit() - b.unit()); }

/// Manhattan distance on R^4 composed of the two planar Euclidean factors.
inline double manhattan4(const CylinderPoint& a, const CylinderPoint& b) {
  return distance(a.point, b.point) + s1_chord(a.dir, b.dir);
}

/// Euclidean distance on the R^4 embedding.
inline double euclid4(const CylinderPoint& a, const CylinderPoint& b) {
  Vec2 dp = a.point - b.point;
  Vec2 dd = a.dir.unit() - b.dir.unit();
  return std::sqrt(norm2(dp) + norm2(dd));
}

// --- non-directed line bookkeeping (used to compare/deduplicate tangents) ---

/// Normal form n . X = c with |n| = 1; the sign of n is not canonical, so
/// comparisons must consider both orientations.
struct LineCanon {
  Vec2 n;
  double c = 0.0;
};

inline LineCanon line_canon(const DirectedLine& l) {
  Vec2 n = left_normal(l.dir);
  return {n, dot(n, l.base - Point2{0.0, 0.0})};
}

/// Gap between two lines as non-directed lines: 0 iff they coincide.
inline double line_gap(const DirectedLine& a, const DirectedLine& b) {
  LineCanon ca = line_canon(a), cb = line_canon(b);
  double same = norm(ca.n - cb.n) + std::fabs(ca.c - cb.c);
  double flip = norm(ca.n + cb.n) + std::fabs(ca.c + cb.c);
  return std::min(same, flip);
}

// --- small segment helpers shared by body queries ---

/// Closest point of segment [a, b] to p; also reports the segment parameter.
inline std::pair<Point2, double> point_segment_closest(Point2 p, Point2 a, Point2 b) {
  Vec2 ab = b - a;
  double den = norm2(ab);
  double t = den > 0.0 ? std::clamp(dot(p - a, ab) / den, 0.0, 1.0) : 0.0;
  return {lerp(a, b, t), t};
}

struct SegmentClosest {
  Point2 on_a;
  Point2 on_b;
  double dist = 0.0;
};

/// Closest pair between segments [a1,a2] and [b1,b2]; exact for the crossing
/// case (distance 0 with the intersection point as witness).
inline SegmentClosest segment_segment_closest(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
  Vec2 da = a2 - a1, db = b2 - b1;
  double denom = cross(da, db);
  if (denom != 0.0) {
    double t = cross(b1 - a1, db) / denom;
    double u = cross(b1 - a1, da) / denom;
    if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) {
      Point2 q = lerp(a1, a2, t);
      return {q, q, 0.0};
    }
  }
  SegmentClosest best;
  best.dist = std::numeric_limits<double>::infinity();
  auto consider = [&](Point2 pa, Point2 pb) {
    double d = distance(pa, pb);
    if (d < best.dist) best = {pa, pb, d};
  };
  consider(a1, point_segment_closest(a1, b1, b2).first);
  consider(a2, point_segment_closest(a2, b1, b2).first);
  consider(point_segment_closest(b1, a1, a2).first, b1);
  consider(point_segment_closest(b2, a1, a2).first, b2);
  return best;
}

}  // namespace slideturn
