#include <doctest.h>

#include "slideturn/convex_fn.hpp"
#include "slideturn/oracles.hpp"
#include "test_util.hpp"

using namespace slideturn;

namespace {

PLConvexFunction abs_fn(double u = 2.0) { return PLConvexFunction::from_nodes({-u, 0, u}, {u, 0, u}); }

/// max(-x, 2x - 3) on (-4, 4): kink where -x = 2x - 3, i.e. x = 1.
PLConvexFunction two_piece() { return PLConvexFunction::from_nodes({-4, 1, 4}, {4, -1, 5}); }

}  // namespace

TEST_CASE("one-sided derivatives") {
  PLConvexFunction f = abs_fn();
  SubdiffInterval at0 = one_sided_derivs(f, 0.0);
  CHECK(at0.lo == -1.0);
  CHECK(at0.hi == 1.0);

  SubdiffInterval at_half = one_sided_derivs(f, 0.5);
  CHECK(at_half.lo == 1.0);
  CHECK(at_half.hi == 1.0);

  PLConvexFunction g = two_piece();
  SubdiffInterval at1 = one_sided_derivs(g, 1.0);
  CHECK(at1.lo == -1.0);
  CHECK(at1.hi == 2.0);

  // Difference-quotient limit oracle with shrinking h.
  for (int k = 4; k <= 20; ++k) {
    double h = std::pow(2.0, -k);
    CHECK((g.value(1.0 + h) - g.value(1.0)) / h == doctest::Approx(2.0));
    CHECK((g.value(1.0 - h) - g.value(1.0)) / (-h) == doctest::Approx(-1.0));
  }

  CHECK_THROWS_AS(one_sided_derivs(f, 2.0), Error);
  CHECK_THROWS_AS(one_sided_derivs(f, -9.0), Error);
}

TEST_CASE("t_map and t_range") {
  CHECK(t_map({0.0, 0.0}) == 0.0);
  CHECK(t_map({0.3, -0.1}) == doctest::Approx(0.2));

  PLConvexFunction f = abs_fn();
  CHECK(t_map({-1.0, f.left_deriv(-1.0)}) == -2.0);  // w1 endpoint

  TRange r = t_range(f, 1.0);
  CHECK(r.w1 == -2.0);
  CHECK(r.w2 == 2.0);

  PLConvexFunction zero = PLConvexFunction::from_nodes({-2, 2}, {0, 0});
  TRange rz = t_range(zero, 1.0);
  CHECK(rz.w1 == -1.0);
  CHECK(rz.w2 == 1.0);

  // Grid-enumeration oracle: w1/w2 are the extreme values of x + d over D.
  testutil::Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    PLConvexFunction g = testutil::random_dyadic_pl(rng);
    double v = testutil::dyadic_inner_width(g);
    TRange tr = t_range(g, v);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i <= 2000; ++i) {
      double x = -v + 2.0 * v * i / 2000.0;
      SubdiffInterval sd = g.subdifferential(x);
      lo = std::min(lo, x + sd.lo);
      hi = std::max(hi, x + sd.hi);
    }
    CHECK(tr.w1 == doctest::Approx(lo).epsilon(1e-9));
    CHECK(tr.w2 == doctest::Approx(hi).epsilon(1e-9));
  }

  CHECK_THROWS_AS(t_range(f, 2.5), Error);
}

TEST_CASE("invert_t: kinks, segments, endpoints") {
  PLConvexFunction f = abs_fn();

  DPoint p0 = invert_t(f, 1.0, 0.0);
  CHECK(p0.x == 0.0);
  CHECK(p0.d == 0.0);

  DPoint kink = invert_t(f, 1.0, 0.5);  // pinned at the kink, d from the subdifferential
  CHECK(kink.x == 0.0);
  CHECK(kink.d == 0.5);

  DPoint w1 = invert_t(f, 1.0, -2.0);
  CHECK(w1.x == -1.0);
  CHECK(w1.d == -1.0);

  CHECK_THROWS_AS(invert_t(f, 1.0, 2.5), Error);
  CHECK_THROWS_AS(oracles::grid_invert_t(f, 1.0, 2.5), Error);

  // Grid oracle agreement and exact round trips on dyadic functions.
  testutil::Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    PLConvexFunction g = testutil::random_dyadic_pl(rng);
    double v = testutil::dyadic_inner_width(g);
    TRange r = t_range(g, v);
    double prev_x = -v;
    for (int i = 0; i <= 256; ++i) {
      double s = r.w1 + (r.w2 - r.w1) * i / 256.0;  // dyadic fraction keeps s exact
      DPoint p = invert_t(g, v, s);
      CHECK(t_map(p) == s);
      CHECK(g.subdifferential(p.x).contains(p.d, 1e-15));
      CHECK(p.x >= prev_x - 1e-15);  // monotone in s
      prev_x = p.x;
      if (i % 13 == 0) {
        DPoint q = oracles::grid_invert_t(g, v, s, 1 << 12);
        CHECK(std::fabs(p.x - q.x) <= 2.0 * v / (1 << 12) + 1e-12);
      }
    }
  }
}

TEST_CASE("dissipativity, the isometry identity, and bi-Lipschitz bounds") {
  testutil::Rng rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    PLConvexFunction f = testutil::random_dyadic_pl(rng);
    double v = testutil::dyadic_inner_width(f);

    // Dissipativity across breakpoints and random pairs.
    std::vector<double> bs = f.breakpoints();
    for (std::size_t i = 0; i + 1 < bs.size(); ++i)
      CHECK(f.right_deriv(bs[i]) <= f.left_deriv(bs[i + 1]));
    for (int i = 0; i < 200; ++i) {
      DPoint a = testutil::random_dyadic_dpoint(rng, f, v);
      DPoint b = testutil::random_dyadic_dpoint(rng, f, v);
      if (a.x > b.x) std::swap(a, b);
      if (a.x < b.x) CHECK(a.d <= b.d);
    }

    // Identity (Manhattan distance from t) and the Lipschitz-2 chain,
    // exact because the generated data is dyadic.
    for (int i = 0; i < 200; ++i) {
      DPoint a = testutil::random_dyadic_dpoint(rng, f, v);
      DPoint b = testutil::random_dyadic_dpoint(rng, f, v);
      if (lex_less(b, a)) std::swap(a, b);
      double manhattan = std::fabs(b.x - a.x) + std::fabs(b.d - a.d);
      double dt = t_map(b) - t_map(a);
      CHECK(manhattan == dt);
      double euclid = std::hypot(b.x - a.x, b.d - a.d);
      CHECK(euclid <= manhattan);
      CHECK(manhattan <= 2.0 * euclid + 1e-15);
      CHECK(0.5 * manhattan <= std::fabs(dt) + 1e-15);
    }
  }
}

TEST_CASE("charts of the unit square") {
  ConvexBody sq = ConvexBody::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

  // Flat face: the chart function vanishes identically.
  Chart flat = chart_at(sq, {0.5, 0});
  CHECK(flat.epsilon == doctest::Approx(0.125));
  CHECK(flat.f.segment_count() == 1);
  CHECK(flat.f.value(0.0) == doctest::Approx(0.0));
  CHECK(flat.f.value(0.1) == doctest::Approx(0.0));

  // Corner: |x| in the rotated frame; the subdifferential fan maps onto the
  // corner's semitangent directions.
  Chart corner = chart_at(sq, {0, 0});
  SubdiffInterval sd = corner.f.subdifferential(0.0);
  CHECK(sd.lo == doctest::Approx(-1.0));
  CHECK(sd.hi == doctest::Approx(1.0));
  SemitangentPair st = semitangents(sq, {0, 0});
  CHECK(same_direction(corner.frame.dir_to_world(sd.lo), st.first.dir, 1e-9));
  CHECK(same_direction(corner.frame.dir_to_world(sd.hi), st.last.dir, 1e-9));

  // Graph points transported back to the world lie on the boundary.
  for (int i = 0; i <= 32; ++i) {
    double x = -corner.epsilon + 2 * corner.epsilon * i / 32.0;
    CHECK(contains(sq, corner.frame.to_world(x, corner.f.value(x)), 1e-9) ==
          Containment::Boundary);
  }

  CHECK_THROWS_AS(chart_at(sq, {0.5, 0.5}), Error);
  CHECK_THROWS_AS(chart_at(ConvexBody::segment({0, 0}, {1, 0}), {0.5, 0}), Error);
}

TEST_CASE("chart of the unit disc matches the closed form") {
  ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
  Chart ch = chart_at(disc, {0, -1});
  CHECK(ch.epsilon == doctest::Approx(0.25));
  const auto& xs = ch.f.node_xs();
  for (double x : xs)
    CHECK(ch.f.value(x) == doctest::Approx(1.0 - std::sqrt(1.0 - x * x)).epsilon(1e-9));
  // Between nodes the PL interpolation is within the chord sag.
  CHECK(ch.f.value(0.1234) == doctest::Approx(1.0 - std::sqrt(1.0 - 0.1234 * 0.1234)).epsilon(1e-6));
  // Frame sanity: the chart origin is P0 and O sits straight above.
  CHECK(distance(ch.frame.to_world(0.0, 0.0), {0, -1}) < 1e-12);
  Point2 o_chart = ch.frame.to_chart(ch.o_point);
  CHECK(o_chart.x == doctest::Approx(0.0));
  CHECK(o_chart.y == doctest::Approx(1.0));
}

TEST_CASE("random polygon charts stay consistent with semitangents") {
  testutil::Rng rng(89);
  for (int trial = 0; trial < 8; ++trial) {
    ConvexBody H = testutil::random_convex_polygon(rng, 4, 14, 2.0);
    const auto& vs = H.as_polygon().vertices;
    Point2 P0 = vs[testutil::uniform_int(rng, 0, static_cast<int>(vs.size()) - 1)];
    Chart ch = chart_at(H, P0);
    SubdiffInterval sd = ch.f.subdifferential(0.0);
    SemitangentPair st = semitangents(H, P0);
    CHECK(same_direction(ch.frame.dir_to_world(sd.lo), st.first.dir, 1e-9));
    CHECK(same_direction(ch.frame.dir_to_world(sd.hi), st.last.dir, 1e-9));
  }
}
