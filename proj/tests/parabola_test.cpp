#include <doctest.h>

#include "dag/parabola.hpp"
#include "dag/sampling.hpp"

using namespace dag;

namespace {
Parabola std_par() { return Parabola::standard(); }
Point on_std(const Scalar& x) { return {x, x * x}; }
}  // namespace

TEST_CASE("circumparabola examples") {
  CHECK(circumparabola({0, 0}, {1, 1}, {2, 4}) == Parabola(1, 0, 0));
  CHECK(circumparabola({0, 0}, {1, 2}, {2, 6}) == Parabola(1, 1, 0));
  CHECK_THROWS_AS(circumparabola({0, 0}, {1, 1}, {2, 2}), GeometryError);
  CHECK_THROWS_AS(circumparabola({0, 0}, {0, 1}, {2, 2}), GeometryError);
  CHECK_THROWS_AS(Parabola(0, 1, 1), GeometryError);
}

TEST_CASE("contains and parabolic power examples") {
  CHECK(contains(std_par(), {3, 9}));
  CHECK_FALSE(contains(std_par(), {3, 8}));
  CHECK(contains(Parabola(2, -2, 1), {Scalar(1, 2), Scalar(1, 2)}));
  CHECK(parabolic_power(std_par(), {0, 1}) == -1);
  CHECK(parabolic_power(std_par(), {4, 16}) == 0);
  CHECK(parabolic_power(Parabola(2, -3, 2), {0, 0}) == 1);
}

TEST_CASE("parabolic power equals the secant root product") {
  // Secants y = 1 + m x through (0,1) on y = x^2 meet at roots of x^2 - m x - 1.
  for (int m : {0, 1, 2}) {
    QuadraticPoly q{1, -m, -1};
    CHECK(q.c0 / q.c2 == parabolic_power(std_par(), {0, 1}));
  }
}

TEST_CASE("iso-angle locus examples") {
  Parabola loc = iso_angle_locus({0, 0}, {2, 0}, 2);
  CHECK(loc == Parabola(1, -2, 0));
  for (Scalar x : {Scalar(-1), Scalar(1, 2), Scalar(1), Scalar(3)}) {
    CHECK(difference_angle({0, 0}, loc.at(x), {2, 0}).value == 2);
  }
  CHECK(iso_angle_locus({0, 0}, {2, 0}, -2) == Parabola(-1, 2, 0));
  CHECK(loc.contains({0, 0}));
  CHECK(loc.contains({2, 0}));
  CHECK_THROWS_AS(iso_angle_locus({0, 0}, {2, 0}, 0), GeometryError);
  CHECK_THROWS_AS(iso_angle_locus({1, 0}, {1, 0}, 2), GeometryError);
  CHECK_THROWS_AS(iso_angle_locus({0, 1}, {2, 0}, 2), GeometryError);
}

TEST_CASE("tangent examples") {
  CHECK(tangent_at(std_par(), 1) == Line::sloped(2, -1));
  CHECK(tangent_at(std_par(), 0) == Line::sloped(0, 0));
  CHECK(tangent_at(Parabola(2, -2, 1), 1) == Line::sloped(2, -1));

  QuadraticPoly t = tangents_from(std_par(), {0, -1});
  CHECK(t == QuadraticPoly{1, 0, -1});
  QuadraticPoly t2 = tangents_from(std_par(), {1, -1});
  CHECK(t2 == QuadraticPoly{1, -2, -1});
  CHECK(-t2.c1 / t2.c2 == 2);
  CHECK_THROWS_AS(tangents_from(std_par(), {0, 1}), GeometryError);
  CHECK_THROWS_AS(tangents_from(std_par(), {2, 4}), GeometryError);
  // Downward opening: (0, 1) lies outside y = -x^2.
  CHECK(tangents_from(Parabola(-1, 0, 0), {0, 1}) == QuadraticPoly{1, 0, -1});
}

TEST_CASE("second intersection examples") {
  CHECK(second_intersection(std_par(), {0, 0}, 3) == Point{3, 9});
  CHECK(second_intersection(std_par(), {1, 1}, 2) == Point{1, 1});
  CHECK(second_intersection(Parabola(1, 1, 0), {0, 0}, 0) == Point{-1, 0});
  CHECK_THROWS_AS(second_intersection(std_par(), {0, 1}, 0), GeometryError);
}

TEST_CASE("parabola meet examples") {
  auto m1 = parabola_meet(std_par(), Parabola(2, -3, 2));
  REQUIRE(m1.meets.size() == 2);
  CHECK(m1.meets[0] == MeetResult::at({1, 1}));
  CHECK(m1.meets[1] == MeetResult::at({2, 4}));

  auto m2 = parabola_meet(Parabola(2, 0, 0), Parabola(2, -2, 1));
  REQUIRE(m2.meets.size() == 2);
  CHECK(m2.meets[0] == MeetResult::at({Scalar(1, 2), Scalar(1, 2)}));
  CHECK(m2.meets[1] == MeetResult::ideal(Slope::singular()));

  auto m3 = parabola_meet(std_par(), Parabola(1, 0, 1));
  REQUIRE(m3.meets.size() == 1);
  CHECK(m3.meets[0].is_empty());

  CHECK(parabola_meet(std_par(), std_par()).meets[0].is_coincident());

  auto m4 = parabola_meet(std_par(), Parabola(2, 0, -2));
  CHECK(m4.irrational);
  CHECK(m4.meets.empty());

  auto m5 = parabola_meet(std_par(), Parabola(2, -3, 2), Point{2, 4});
  REQUIRE(m5.meets.size() == 2);
  CHECK(m5.meets[1] == MeetResult::at({1, 1}));
  CHECK_THROWS_AS(parabola_meet(std_par(), Parabola(2, -3, 2), Point{3, 9}), GeometryError);
}

TEST_CASE("inscribed angle and opposite angle examples") {
  CHECK(difference_angle(on_std(0), on_std(2), on_std(1)).value == 1);
  CHECK(difference_angle(on_std(0), on_std(3), on_std(1)).value == 1);
  CHECK(inscribed_angle_check(std_par(), on_std(0), on_std(1), on_std(2), on_std(3)) == 0);
  CHECK(inscribed_angle_check(std_par(), on_std(0), on_std(1), on_std(2), on_std(2)) == 0);
  CHECK_THROWS_AS(inscribed_angle_check(std_par(), on_std(0), on_std(1), on_std(2), {3, 8}), GeometryError);

  CHECK(opposite_angle_sum({0, 0}, {1, 1}, {2, 4}, {3, 9}) == 0);
  CHECK(opposite_angle_sum({0, 0}, {1, 1}, {2, 4}, {3, 8}) != 0);
  CHECK(opposite_angle_sum(on_std(2), on_std(3), on_std(4), on_std(5)) == 0);
  // D on the mirror parabola through A and C: still detected as off-parabola.
  CHECK(opposite_angle_sum({0, 0}, {1, 1}, {2, 4}, {3, -3}) != 0);
  CHECK_THROWS_AS(opposite_angle_sum({0, 0}, {1, 1}, {2, 4}, {2, 9}), GeometryError);
}

TEST_CASE("parabola properties on random inputs") {
  Sampler s(11, 50);
  for (int i = 0; i < 200; ++i) {
    Parabola p(s.nonzero_rational(), s.rational(), s.rational());
    Scalar u = s.rational(), v = s.rational(), w = s.rational();
    if (u == v || v == w || u == w) continue;
    CHECK(circumparabola(p.at(u), p.at(v), p.at(w)) == p);

    // Tangent: eliminant has a double root at x0.
    Line tan = tangent_at(p, u);
    QuadraticPoly e{p.kappa(), p.beta() - tan.m(), p.gamma() - tan.k()};
    CHECK(e.discriminant() == 0);
    CHECK(e(u) == 0);

    Scalar m = s.rational();
    Point q = second_intersection(p, p.at(u), m);
    CHECK(p.contains(q));
    CHECK(second_intersection(p, q, m) == p.at(u));

    // Opposite-angle predicate holds for any vertex order.
    Scalar x4 = s.rational();
    if (x4 != u && x4 != v && x4 != w) {
      CHECK(opposite_angle_sum(p.at(u), p.at(w), p.at(v), p.at(x4)) == 0);
      Point off{x4, p(x4) + s.nonzero_rational()};
      CHECK(opposite_angle_sum(p.at(u), p.at(w), p.at(v), off) != 0);
    }

    Parabola p2(s.nonzero_rational(), s.rational(), s.rational());
    if (p2.kappa() != p.kappa()) {
      // Shift p2 so it passes through p.at(u), then the second meet is rational.
      Parabola p3(p2.kappa(), p2.beta(), p2.gamma() + p(u) - p2(u));
      auto mt = parabola_meet(p, p3, p.at(u));
      for (const auto& r : mt.meets) {
        CHECK(p.contains(r.point()));
        CHECK(p3.contains(r.point()));
      }
    }
  }
}
