#include <doctest.h>

#include "slideturn/geom.hpp"
#include "test_util.hpp"

using namespace slideturn;

TEST_CASE("canonical angles") {
  CHECK(canonical_angle(0.0) == 0.0);
  CHECK(canonical_angle(kPi) == -kPi);
  CHECK(canonical_angle(-kPi) == -kPi);
  CHECK(canonical_angle(kTwoPi) == 0.0);

  testutil::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    double t = testutil::uniform(rng, -50.0, 50.0);
    double c = canonical_angle(t);
    CHECK(c >= -kPi);
    CHECK(c < kPi);
    CHECK(canonical_angle(c) == c);                              // idempotent
    CHECK(canonical_angle(t + kTwoPi) == doctest::Approx(c).epsilon(1e-12));  // mod 2pi
  }
}

TEST_CASE("direction round-trips through the unit-circle embedding") {
  testutil::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    Direction d(testutil::uniform(rng, -40.0, 40.0));
    Direction back = Direction::of_vector(d.unit());
    CHECK(std::fabs(back.theta - d.theta) < 1e-12);
  }
}

TEST_CASE("signed_side examples") {
  CHECK(signed_side({{0, 0}, Direction(0.0)}, {5, 1}) == doctest::Approx(1.0));
  CHECK(signed_side({{0, 0}, Direction(0.0)}, {5, 0}) == doctest::Approx(0.0));

  // Rotating-coordinates oracle: map the configuration so the line becomes
  // the +x axis, then read the point's y coordinate.
  auto rotated_side = [](const DirectedLine& l, Point2 X) {
    Vec2 v = X - l.base;
    double c = std::cos(-l.dir.theta), s = std::sin(-l.dir.theta);
    return v.x * s + v.y * c;
  };
  DirectedLine down{{2, 0}, Direction(-kPi / 2)};
  CHECK(rotated_side(down, {0, 0}) == doctest::Approx(-2.0));
  CHECK(signed_side(down, {0, 0}) == doctest::Approx(-2.0));

  testutil::Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    DirectedLine l{{testutil::uniform(rng, -5, 5), testutil::uniform(rng, -5, 5)},
                   Direction(testutil::uniform(rng, -10, 10))};
    Point2 X{testutil::uniform(rng, -5, 5), testutil::uniform(rng, -5, 5)};
    CHECK(signed_side(l, X) == doctest::Approx(rotated_side(l, X)).epsilon(1e-12));
    // Invariance under sliding the base along the direction.
    DirectedLine slid{l.base + testutil::uniform(rng, -3, 3) * l.dir.unit(), l.dir};
    CHECK(signed_side(slid, X) == doctest::Approx(signed_side(l, X)).epsilon(1e-9));
  }
}

TEST_CASE("cylinder distances") {
  CylinderPoint o{{0, 0}, Direction(0.0)};
  CHECK(manhattan4(o, o) == 0.0);
  CHECK(manhattan4(o, {{3, 4}, Direction(0.0)}) == doctest::Approx(5.0));
  CHECK(manhattan4(o, {{0, 0}, Direction(kPi)}) == doctest::Approx(2.0));  // antipodal chord

  CHECK(euclid4(o, o) == 0.0);
  CHECK(euclid4(o, {{3, 0}, Direction(0.0)}) == doctest::Approx(3.0));
  CHECK(euclid4(o, {{0, 0}, Direction(kPi)}) == doctest::Approx(2.0));
}

TEST_CASE("norm equivalence on the cylinder") {
  testutil::Rng rng(17);
  for (int i = 0; i < 10000; ++i) {
    CylinderPoint a{{testutil::uniform(rng, -9, 9), testutil::uniform(rng, -9, 9)},
                    Direction(testutil::uniform(rng, -9, 9))};
    CylinderPoint b{{testutil::uniform(rng, -9, 9), testutil::uniform(rng, -9, 9)},
                    Direction(testutil::uniform(rng, -9, 9))};
    double e = euclid4(a, b), m = manhattan4(a, b);
    CHECK(e <= m + 1e-12);
    CHECK(m <= 2.0 * e + 1e-12);
  }
}

TEST_CASE("directed line identity") {
  DirectedLine a{{0, 0}, Direction(kPi / 4)};
  DirectedLine b{{1, 1}, Direction(kPi / 4)};
  CHECK(same_directed_line(a, b, 1e-9));
  CHECK(!same_directed_line(a, DirectedLine{{1, 0}, Direction(kPi / 4)}));
  CHECK(!same_directed_line(a, DirectedLine{{0, 0}, Direction(-3 * kPi / 4)}));
  CHECK(line_gap(a, DirectedLine{{0, 0}, Direction(-3 * kPi / 4)}) == doctest::Approx(0.0));
}
