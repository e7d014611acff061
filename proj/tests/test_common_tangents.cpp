#include <doctest.h>

#include "slideturn/common_tangents.hpp"
#include "slideturn/oracles.hpp"
#include "test_util.hpp"

using namespace slideturn;

namespace {
ConvexBody unit_square() { return ConvexBody::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
ConvexBody far_square() { return ConvexBody::polygon({{3, 0}, {4, 0}, {4, 1}, {3, 1}}); }
}  // namespace

TEST_CASE("side classification") {
  ConvexBody sq = unit_square();
  CHECK(side_of({{0, 0}, Direction(0.0)}, sq) == SideClass::Touching);
  CHECK(side_of({{0, -5}, Direction(0.0)}, sq) == SideClass::Left);
  CHECK(side_of({{0, 0.5}, Direction(0.0)}, sq) == SideClass::Crossing);
  CHECK(side_of({{0, 5}, Direction(0.0)}, sq) == SideClass::Right);
}

TEST_CASE("two unit discs match the closed form") {
  ConvexBody d1 = ConvexBody::disc({0, 0}, 1.0);
  ConvexBody d2 = ConvexBody::disc({4, 0}, 1.0);
  CommonTangentReport rep = common_supporting_lines(d1, d2);

  // Events in sweep order: inner (dir 5pi/6), outer y = 1 (dir pi), outer
  // y = -1 (dir 0 at the wrap), inner (dir pi/6). sin(theta) = 1/2 for the
  // inner pair; slide parameters scale by sqrt(2).
  const double s2 = std::sqrt(2.0);
  CHECK(rep.events[0].param == doctest::Approx((5 * kPi / 6 - kPi / 2) * s2).epsilon(1e-9));
  CHECK(rep.events[0].line.dir.theta == doctest::Approx(5 * kPi / 6).epsilon(1e-9));
  CHECK(rep.events[1].line.dir.theta == doctest::Approx(-kPi).epsilon(1e-9));
  CHECK(rep.events[2].line.dir.theta == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(rep.events[3].line.dir.theta == doctest::Approx(kPi / 6).epsilon(1e-9));

  // Outer tangents are the lines y = 1 and y = -1.
  CHECK(std::fabs(signed_side(rep.events[1].line, {0, 1})) < 1e-9);
  CHECK(std::fabs(signed_side(rep.events[1].line, {4, 1})) < 1e-9);
  CHECK(std::fabs(signed_side(rep.events[2].line, {0, -1})) < 1e-9);

  // Inner tangents pass through the midpoint (2, 0) with slopes +-1/sqrt(3).
  CHECK(std::fabs(signed_side(rep.events[0].line, {2, 0})) < 1e-9);
  CHECK(std::fabs(signed_side(rep.events[3].line, {2, 0})) < 1e-9);
  CHECK(std::tan(rep.events[3].line.dir.theta) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));

  CHECK(rep.events[0].kind == TangentKind::RightToTouch);
  CHECK(rep.events[1].kind == TangentKind::TouchToLeft);
  CHECK(rep.events[2].kind == TangentKind::LeftToTouch);
  CHECK(rep.events[3].kind == TangentKind::TouchToRight);

  for (const TangentEvent& ev : rep.events) {
    CHECK(side_of(ev.line, d1) == SideClass::Touching);
    CHECK(side_of(ev.line, d2) == SideClass::Touching);
    CHECK(distance(ev.touch1, closest_point_on_body(d1, ev.touch1)) < 1e-9);
    CHECK(distance(ev.touch2, closest_point_on_body(d2, ev.touch2)) < 1e-9);
  }
}

TEST_CASE("two axis-aligned squares: outer face tangents, inner diagonals") {
  ConvexBody a = unit_square(), b = far_square();
  CommonTangentReport rep = common_supporting_lines(a, b);

  // Outer tangents y = 0 and y = 1 (face-to-face runs collapse to their
  // first parameter), inner tangents through (1,1)-(3,0) and (1,0)-(3,1).
  auto has_line_through = [&](Point2 p, Point2 q) {
    for (const TangentEvent& ev : rep.events)
      if (std::fabs(signed_side(ev.line, p)) < 1e-9 && std::fabs(signed_side(ev.line, q)) < 1e-9)
        return true;
    return false;
  };
  CHECK(has_line_through({0, 0}, {4, 0}));
  CHECK(has_line_through({0, 1}, {4, 1}));
  CHECK(has_line_through({1, 1}, {3, 0}));
  CHECK(has_line_through({1, 0}, {3, 1}));

  CHECK(distance(rep.events[0].touch1, {1, 1}) < 1e-9);
  CHECK(distance(rep.events[0].touch2, {3, 0}) < 1e-9);

  // Pairwise distinct as non-directed lines.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(line_gap(rep.events[i].line, rep.events[j].line) > 1e-6);

  // t1 < t2 < t3 < t4 measured from the separated start.
  for (int i = 0; i + 1 < 4; ++i) CHECK(rep.events[i].param < rep.events[i + 1].param);
}

TEST_CASE("disc and square mix") {
  CommonTangentReport rep =
      common_supporting_lines(ConvexBody::disc({0, 0}, 1.0), far_square());
  for (const TangentEvent& ev : rep.events) {
    CHECK(side_of(ev.line, ConvexBody::disc({0, 0}, 1.0)) == SideClass::Touching);
    CHECK(side_of(ev.line, far_square()) == SideClass::Touching);
  }
  // Swapped order sweeps the square's curve instead.
  CommonTangentReport swapped =
      common_supporting_lines(far_square(), ConvexBody::disc({0, 0}, 1.0));
  double gap = oracles::line_set_hausdorff(
      {rep.events[0].line, rep.events[1].line, rep.events[2].line, rep.events[3].line},
      {swapped.events[0].line, swapped.events[1].line, swapped.events[2].line,
       swapped.events[3].line});
  CHECK(gap < 1e-8);
}

TEST_CASE("randomized pairs always yield four touching, distinct lines") {
  testutil::Rng rng(113);
  for (int trial = 0; trial < 25; ++trial) {
    auto [H1, H2] = testutil::random_disjoint_pair(rng);
    CommonTangentReport rep = common_supporting_lines(H1, H2);
    for (const TangentEvent& ev : rep.events) {
      CHECK(side_of(ev.line, H1) == SideClass::Touching);
      CHECK(side_of(ev.line, H2) == SideClass::Touching);
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        CHECK(line_gap(rep.events[i].line, rep.events[j].line) > 1e-7);
    // Inner events leave the bodies on opposite sides, outer on the same.
    for (int i : {0, 3}) {
      SideRange r2 = side_range(rep.events[i].line, H2);
      CHECK(r2.min_side < 1e-7);  // H2 weakly right at inner tangents
    }
    for (int i : {1, 2}) {
      SideRange r2 = side_range(rep.events[i].line, H2);
      CHECK(r2.max_side > -1e-7);  // H2 weakly left at outer tangents
    }
    CHECK(rep.events[0].param < rep.events[1].param);
    CHECK(rep.events[1].param < rep.events[2].param);
    CHECK(rep.events[2].param < rep.events[3].param);
  }
}

TEST_CASE("agreement with the direction-scan oracle") {
  testutil::Rng rng(127);
  for (int trial = 0; trial < 8; ++trial) {
    auto [H1, H2] = testutil::random_disjoint_pair(rng);
    CommonTangentReport rep = common_supporting_lines(H1, H2);
    std::vector<DirectedLine> brute = oracles::brute_common_tangents(H1, H2);
    REQUIRE(brute.size() == 4);
    std::vector<DirectedLine> mine;
    for (const TangentEvent& ev : rep.events) mine.push_back(ev.line);
    CHECK(oracles::line_set_hausdorff(mine, brute) < 1e-6);
  }
}

TEST_CASE("tangent count sweep histogram") {
  SweepHistogram h = tangent_count_sweep(ConvexBody::disc({0, 0}, 1.0),
                                         ConvexBody::disc({4, 0}, 1.0), 10000);
  CHECK(h.transitions == 4);
  CHECK(h.pattern_ok);
  CHECK(h.right > 0);
  CHECK(h.left > 0);
  CHECK(h.crossing > 0);

  SweepHistogram hs = tangent_count_sweep(unit_square(), far_square(), 10000);
  CHECK(hs.transitions == 4);
  CHECK(hs.pattern_ok);
}

TEST_CASE("degenerate and intersecting inputs are rejected") {
  ConvexBody sq = unit_square();
  CHECK_THROWS_AS(common_supporting_lines(sq, sq), Error);
  CHECK_THROWS_AS(tangent_count_sweep(sq, sq, 100), Error);
  CHECK_THROWS_AS(common_supporting_lines(sq, ConvexBody::segment({3, 0}, {4, 0})), Error);
  CHECK_THROWS_AS(common_supporting_lines(ConvexBody::point({3, 3}), sq), Error);

  try {
    common_supporting_lines(sq, sq);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDisjoint);
  }
}
