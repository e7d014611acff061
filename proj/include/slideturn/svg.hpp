#pragma once

// Minimal SVG emitter. Every geometric primitive becomes exactly one <path>
// element, which keeps the output diffable and easy to golden-test on
// structure. Scene coordinates are mathematical (y up); the writer flips.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "slideturn/common_tangents.hpp"
#include "slideturn/convex_body.hpp"
#include "slideturn/geom.hpp"
#include "slideturn/parallel_body.hpp"
#include "slideturn/slide_curve.hpp"

namespace slideturn::svg {

struct BBox {
  double minx = 0.0, miny = 0.0, maxx = 1.0, maxy = 1.0;

  void grow(Point2 p) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
    maxx = std::max(maxx, p.x);
    maxy = std::max(maxy, p.y);
  }
  void pad(double m) {
    minx -= m;
    miny -= m;
    maxx += m;
    maxy += m;
  }
};

inline BBox body_bbox(const ConvexBody& H) {
  BBox b;
  b.minx = b.miny = std::numeric_limits<double>::infinity();
  b.maxx = b.maxy = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 64; ++i)
    b.grow(H.extreme_point(Direction(-kPi + kTwoPi * i / 64.0)));
  return b;
}

inline std::string num(double v) {
  if (v == 0.0) v = 0.0;  // flush -0
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

class Writer {
 public:
  explicit Writer(BBox box) : box_(box) {}

  void path(const std::string& d, const std::string& stroke, double width,
            const std::string& dash = "", const std::string& fill = "none") {
    std::ostringstream os;
    os << "  <path d=\"" << d << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
       << "\" fill=\"" << fill << "\"";
    if (!dash.empty()) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n";
    paths_.push_back(os.str());
  }

  std::string move_to(Point2 p) const { return "M " + num(p.x) + " " + num(-p.y); }
  std::string line_to(Point2 p) const { return " L " + num(p.x) + " " + num(-p.y); }

  std::string polyline_d(const std::vector<Point2>& pts, bool close) const {
    std::string d = move_to(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) d += line_to(pts[i]);
    if (close) d += " Z";
    return d;
  }

  std::string circle_d(Point2 c, double r) const {
    // Two arcs; SVG has no single-command full circle inside a path.
    std::string d = move_to({c.x - r, c.y});
    d += " A " + num(r) + " " + num(r) + " 0 1 0 " + num(c.x + r) + " " + num(-c.y);
    d += " A " + num(r) + " " + num(r) + " 0 1 0 " + num(c.x - r) + " " + num(-c.y);
    return d;
  }

  std::string dot_d(Point2 p, double r = 0.02) const { return circle_d(p, r); }

  /// Clips the infinite line to the scene box (drawn as a long segment).
  std::string line_d(const DirectedLine& l) const {
    double t = 2.0 * (std::fabs(box_.maxx - box_.minx) + std::fabs(box_.maxy - box_.miny) + 1.0);
    Vec2 u = l.dir.unit();
    return move_to(l.base - t * u) + line_to(l.base + t * u);
  }

  std::string body_d(const ConvexBody& H) const {
    if (const auto* p = std::get_if<Polygon>(&H.rep())) return polyline_d(p->vertices, true);
    if (const auto* c = std::get_if<Disc>(&H.rep())) return circle_d(c->center, c->radius);
    if (const auto* s = std::get_if<Segment>(&H.rep())) return polyline_d({s->a, s->b}, false);
    if (const auto* q = std::get_if<SinglePoint>(&H.rep())) return dot_d(q->p);
    std::vector<Point2> pts;
    for (int i = 0; i <= 256; ++i)
      pts.push_back(H.extreme_point(Direction(-kPi + kTwoPi * i / 256.0)));
    return polyline_d(pts, true);
  }

  std::string str() const {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    double w = box_.maxx - box_.minx, h = box_.maxy - box_.miny;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box_.minx) << " "
       << num(-box_.maxy) << " " << num(w) << " " << num(h) << "\">\n";
    for (const std::string& p : paths_) os << p;
    os << "</svg>\n";
    return os.str();
  }

  std::size_t path_count() const { return paths_.size(); }

 private:
  BBox box_;
  std::vector<std::string> paths_;
};

/// Body with a fan of supporting lines at k evenly spaced slide parameters.
inline std::string slide_scene(const ConvexBody& H, const SlideCurve& sc, int k) {
  BBox box = body_bbox(H);
  box.pad(0.6 * std::max(1.0, 0.2 * (box.maxx - box.minx)));
  Writer w(box);
  w.path(w.body_d(H), "black", 0.02);
  for (int i = 0; i < k; ++i) {
    CylinderPoint q = sc.eval(sc.length() * i / k);
    w.path(w.line_d(DirectedLine{q.point, q.dir}), "steelblue", 0.008);
  }
  for (int i = 0; i < k; ++i) {
    CylinderPoint q = sc.eval(sc.length() * i / k);
    w.path(w.dot_d(q.point), "crimson", 0.004, "", "crimson");
  }
  return w.str();
}

/// Unrolled slide curve: boundary position against direction coordinate.
inline std::string unrolled_scene(const SlideCurve& sc, int samples = 512) {
  double L = sc.length();
  double bmax = sc.boundary_progress(L * (1.0 - 1e-12));
  BBox box{0.0, 0.0, std::max(bmax, 1e-6), kTwoPi};
  box.pad(0.4);
  Writer w(box);
  // Axes.
  w.path(w.move_to({0.0, 0.0}) + w.line_to({bmax, 0.0}), "gray", 0.01);
  w.path(w.move_to({0.0, 0.0}) + w.line_to({0.0, kTwoPi}), "gray", 0.01);
  std::vector<Point2> pts;
  for (int i = 0; i <= samples; ++i) {
    double s = L * i / samples * (1.0 - 1e-12);
    pts.push_back({sc.boundary_progress(s), sc.direction_coordinate(s)});
  }
  w.path(w.polyline_d(pts, false), "black", 0.02);
  return w.str();
}

/// Second-proof scene: the body, its parallel boundary, one P/P* pair with
/// the two parallel supporting lines and the unit circles around them.
inline std::string parallel_scene(const ConvexBody& H, const ParallelBody& pb, double t) {
  BBox box = body_bbox(H);
  box.pad(pb.radius() * 1.8 + 0.5);
  Writer w(box);
  w.path(w.body_d(H), "black", 0.02);
  std::vector<Point2> offset;
  int n = 512;
  for (int i = 0; i <= n; ++i) offset.push_back(pb.boundary_point(pb.perimeter() * i / n));
  w.path(w.polyline_d(offset, true), "steelblue", 0.015);
  Point2 P = pb.boundary_point(t);
  CylinderPoint star = boundary_to_slide(H, P, pb.radius(), 1e-6);
  w.path(w.dot_d(P), "crimson", 0.004, "", "crimson");
  w.path(w.dot_d(star.point), "crimson", 0.004, "", "crimson");
  w.path(w.line_d(DirectedLine{star.point, star.dir}), "darkgreen", 0.01);
  w.path(w.line_d(DirectedLine{P, star.dir}), "darkgreen", 0.01);
  w.path(w.circle_d(P, pb.radius()), "gray", 0.008, "4 2");
  w.path(w.circle_d(star.point, pb.radius()), "gray", 0.008, "4 2");
  return w.str();
}

/// Common-tangents scene: both bodies, the separating line (dotted) and the four
/// common supporting lines with their touch points.
inline std::string tangents_scene(const ConvexBody& H1, const ConvexBody& H2,
                                  const CommonTangentReport& rep) {
  BBox box = body_bbox(H1);
  BBox b2 = body_bbox(H2);
  box.grow({b2.minx, b2.miny});
  box.grow({b2.maxx, b2.maxy});
  box.pad(1.0);
  Writer w(box);
  w.path(w.body_d(H1), "black", 0.02);
  w.path(w.body_d(H2), "black", 0.02);
  w.path(w.line_d(rep.separator), "gray", 0.008, "2 2");
  for (const TangentEvent& ev : rep.events) w.path(w.line_d(ev.line), "steelblue", 0.01);
  for (const TangentEvent& ev : rep.events) {
    w.path(w.dot_d(ev.touch1), "crimson", 0.004, "", "crimson");
    w.path(w.dot_d(ev.touch2), "crimson", 0.004, "", "crimson");
  }
  return w.str();
}

}  // namespace slideturn::svg
