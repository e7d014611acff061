#include <doctest.h>

#include "slideturn/convex_body.hpp"
#include "slideturn/oracles.hpp"
#include "test_util.hpp"

using namespace slideturn;

namespace {

ConvexBody unit_square() { return ConvexBody::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

/// Generic-body view of the unit square through its support callbacks.
ConvexBody generic_square() {
  auto sq = unit_square();
  return ConvexBody::generic([sq](Direction d) { return sq.support(d); },
                             [sq](Direction d) { return sq.extreme_point(d); });
}

}  // namespace

TEST_CASE("polygon canonicalization") {
  // Clockwise input is re-oriented; collinear interior vertices are dropped.
  ConvexBody H = ConvexBody::polygon({{0, 1}, {1, 1}, {1, 0}, {0.5, 0}, {0, 0}});
  const Polygon& p = H.as_polygon();
  CHECK(p.vertices.size() == 4);
  CHECK(detail::polygon_signed_area(p.vertices) > 0.0);

  CHECK_THROWS_AS(ConvexBody::polygon({{0, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(ConvexBody::polygon({{0, 0}, {2, 0}, {1, 0.5}, {2, 1}, {0, 1}}), Error);
  CHECK(ConvexBody::disc({1, 2}, 0.0).is_point());  // radius 0 collapses
  CHECK(ConvexBody::segment({1, 2}, {1, 2}).is_point());
}

TEST_CASE("extreme sets") {
  ConvexBody sq = unit_square();

  ExtremeSet bottom = extreme_set(sq, Direction(0.0));
  REQUIRE(bottom.is_edge());
  CHECK(std::get<ExtremeSet::Edge>(bottom.v).from == Point2{0, 0});
  CHECK(std::get<ExtremeSet::Edge>(bottom.v).to == Point2{1, 0});

  ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
  testutil::Rng rng(3);
  for (int i = 0; i < 64; ++i) {
    Direction a(testutil::uniform(rng, -10, 10));
    ExtremeSet es = extreme_set(disc, a);
    REQUIRE(!es.is_edge());
    Point2 expect{std::sin(a.theta), -std::cos(a.theta)};
    CHECK(distance(es.first(), expect) < 1e-12);
  }

  ExtremeSet diag = extreme_set(sq, Direction(kPi / 4));
  REQUIRE(!diag.is_edge());
  CHECK(diag.first() == Point2{1, 0});
}

TEST_CASE("extreme set matches brute argmax on random polygons") {
  testutil::Rng rng(5);
  for (int body = 0; body < 10; ++body) {
    ConvexBody H = testutil::random_convex_polygon(rng, 3, 20, 2.0);
    for (int k = 0; k < 72; ++k) {
      Direction a(-kPi + kTwoPi * k / 72.0);
      Point2 fast = extreme_set(H, a).first();
      DirectedLine brute = oracles::brute_supporting_line(H, a);
      CHECK(fast == brute.base);
    }
  }
}

TEST_CASE("supporting-line property of extreme sets") {
  testutil::Rng rng(27);
  for (int body = 0; body < 8; ++body) {
    ConvexBody H = testutil::random_convex_polygon(rng, 3, 16, 2.0);
    for (int k = 0; k < 90; ++k) {
      Direction a(-kPi + kTwoPi * k / 90.0);
      DirectedLine l{extreme_set(H, a).first(), a};
      double min_side = std::numeric_limits<double>::infinity();
      for (const Point2& v : H.as_polygon().vertices)
        min_side = std::min(min_side, signed_side(l, v));
      CHECK(min_side >= -1e-12);       // whole body weakly left
      CHECK(min_side <= 1e-12);        // and the line is touched
    }
  }
}

TEST_CASE("containment classification") {
  ConvexBody sq = unit_square();
  CHECK(contains(sq, {0.5, 0.5}) == Containment::Interior);
  CHECK(contains(sq, {1.0, 0.5}) == Containment::Boundary);
  CHECK(contains(ConvexBody::disc({0, 0}, 1.0), {2, 0}) == Containment::Outside);

  // Convexity preservation: midpoints of non-outside points stay inside.
  testutil::Rng rng(29);
  ConvexBody H = testutil::random_convex_polygon(rng, 5, 10, 2.0);
  for (int i = 0; i < 500; ++i) {
    Point2 X{testutil::uniform(rng, -3, 3), testutil::uniform(rng, -3, 3)};
    Point2 Y{testutil::uniform(rng, -3, 3), testutil::uniform(rng, -3, 3)};
    if (contains(H, X) != Containment::Outside && contains(H, Y) != Containment::Outside)
      CHECK(contains(H, midpoint(X, Y)) != Containment::Outside);
  }
}

TEST_CASE("ray boundary hits") {
  ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
  CHECK(distance(ray_boundary_hit(disc, {0, 0}, Direction(0.0)), {1, 0}) < 1e-12);

  ConvexBody sq = unit_square();
  CHECK(distance(ray_boundary_hit(sq, {0.5, 0.5}, Direction(0.0)), {1, 0.5}) < 1e-12);
  CHECK(distance(ray_boundary_hit(sq, {0.5, 0.5}, Direction(kPi / 4)), {1, 1}) < 1e-12);

  CHECK_THROWS_AS(ray_boundary_hit(sq, {2, 2}, Direction(0.0)), Error);
  CHECK_THROWS_AS(ray_boundary_hit(ConvexBody::segment({0, 0}, {1, 0}), {0.5, 0}, Direction(0.0)),
                  Error);

  // Bisection oracle along the ray against contains().
  testutil::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    ConvexBody H = testutil::random_convex_polygon(rng, 4, 12, 2.0);
    Point2 O = H.centroid();
    Direction d(testutil::uniform(rng, -kPi, kPi));
    Point2 hit = ray_boundary_hit(H, O, d);
    double lo = 0.0, hi = 64.0;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      if (contains(H, O + mid * d.unit(), 0.0) == Containment::Outside)
        hi = mid;
      else
        lo = mid;
    }
    CHECK(distance(hit, O + 0.5 * (lo + hi) * d.unit()) < 1e-9);
  }
}

TEST_CASE("perimeters") {
  CHECK(unit_square().perimeter() == doctest::Approx(4.0));
  CHECK(ConvexBody::disc({0, 0}, 1.0).perimeter() == doctest::Approx(kTwoPi));
  CHECK(ConvexBody::segment({0, 0}, {3, 0}).perimeter() == doctest::Approx(6.0));
  CHECK(ConvexBody::point({2, 2}).perimeter() == 0.0);
  CHECK(generic_square().perimeter() == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("generic body validation") {
  auto sq = unit_square();
  // Extreme callback inconsistent with the support values.
  CHECK_THROWS_AS(ConvexBody::generic([sq](Direction d) { return sq.support(d); },
                                      [](Direction) {
                                        return Point2{10, 10};
                                      }),
                  Error);
  // Non-sublinear "support function".
  CHECK_THROWS_AS(ConvexBody::generic([](Direction d) { return std::fabs(std::sin(2 * d.theta)); },
                                      [](Direction) {
                                        return Point2{0, 0};
                                      }),
                  Error);
  CHECK(generic_square().support(Direction(0.0)) == doctest::Approx(1.0));
}
