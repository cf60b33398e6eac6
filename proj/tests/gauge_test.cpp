#include <doctest.h>

#include <vector>

#include "dag/gauge.hpp"

using namespace dag;

TEST_CASE("normalize_chart examples") {
  std::vector<Point> one{{3, 4}};
  CHECK(normalize_chart(Gauge::identity(), one)[0] == Point{3, 4});

  Gauge g1{{0, 0}, {1, 0}, {1, 1}};
  std::vector<Point> p1{{2, 2}};
  CHECK(normalize_chart(g1, p1)[0] == Point{0, 2});

  Gauge g2{{1, 1}, {2, 0}, {0, 3}};
  std::vector<Point> p2{{3, 4}};
  CHECK(normalize_chart(g2, p2)[0] == Point{1, 1});
  CHECK(g2.from_chart({1, 1}) == Point{3, 4});

  Gauge bad{{0, 0}, {1, 2}, {2, 4}};
  CHECK_THROWS_AS(normalize_chart(bad, p2), GeometryError);
}

TEST_CASE("slope_between examples") {
  CHECK(slope_between({1, 1}, {2, 4}) == Slope::finite(3));
  CHECK(slope_between({2, 0}, {2, 9}).is_singular());
  CHECK(slope_between({0, 0}, {5, 0}) == Slope::finite(0));
  CHECK_THROWS_AS(slope_between({1, 1}, {1, 1}), GeometryError);
  CHECK_THROWS_AS(slope_between({2, 0}, {2, 9}).value(), GeometryError);
}

TEST_CASE("difference_angle examples") {
  CHECK(difference_angle({0, 0}, {1, -1}, {2, 0}).value == 2);
  CHECK(difference_angle({1, 5}, {1, 0}, {7, 3}).value == 0);
  CHECK(difference_angle({0, 0}, {1, 1}, {2, 2}).value == 0);
  CHECK(difference_angle({2, 0}, {1, -1}, {0, 0}).value == -2);
  // C = (3/2, 0): Slp(PC) = 2, so APC = 3 and CPB = -1.
  Point c{Scalar(3, 2), 0};
  CHECK(difference_angle({0, 0}, {1, -1}, c).value == 3);
  CHECK(difference_angle(c, {1, -1}, {2, 0}).value == -1);
  CHECK(difference_angle({0, 0}, {5, -5}, {10, 0}).value == 2);
  CHECK_THROWS_AS(difference_angle({0, 0}, {0, 0}, {1, 1}), GeometryError);
  CHECK_THROWS_AS(difference_angle({0, 0}, {1, 1}, {1, 1}), GeometryError);
}

TEST_CASE("da_norm and line_through examples") {
  CHECK(da_norm({0, 5}, {3, 7}) == 3);
  CHECK(da_norm({2, 1}, {2, 99}) == 0);
  CHECK(da_norm({3, 1}, {0, 0}) == 3);
  CHECK(directed_norm({3, 1}, {0, 0}) == -3);
  CHECK(line_through({0, 0}, {1, 3}) == Line::sloped(3, 0));
  CHECK(line_through({1, 1}, {2, 4}) == Line::sloped(3, -2));
  CHECK(line_through({4, 0}, {4, 9}) == Line::singular(4));
  CHECK_THROWS_AS(line_through({4, 0}, {4, 0}), GeometryError);
}

TEST_CASE("meet examples") {
  CHECK(meet(Line::sloped(Scalar(3, 2), 0), Line::sloped(3, -2)) == MeetResult::at({Scalar(4, 3), 2}));
  CHECK(meet(Line::sloped(1, 0), Line::sloped(1, 5)) == MeetResult::ideal(Slope::finite(1)));
  CHECK(meet(Line::singular(0), Line::singular(7)) == MeetResult::ideal(Slope::singular()));
  CHECK(meet(Line::singular(2), Line::singular(2)).is_coincident());
  CHECK(meet(Line::sloped(1, 1), Line::sloped(1, 1)).is_coincident());
  CHECK(meet(Line::singular(2), Line::sloped(1, 1)) == MeetResult::at({2, 3}));
  CHECK_THROWS_AS(MeetResult::empty().point(), GeometryError);
}
