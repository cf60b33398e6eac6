#include <doctest.h>

#include "dag/sampling.hpp"
#include "dag/scalar.hpp"

using dag::QuadraticPoly;
using dag::Scalar;

TEST_CASE("parse canonicalizes fractions and reads decimals exactly") {
  CHECK(Scalar::parse("3/6") == Scalar(1, 2));
  CHECK(Scalar::parse("3/6").str() == "1/2");
  CHECK(Scalar::parse("0") == Scalar(0));
  CHECK(Scalar::parse("0").denominator() == 1);
  CHECK(Scalar::parse("0.25") == Scalar(1, 4));
  CHECK(Scalar::parse("-1.5") == Scalar(-3, 2));
  CHECK(Scalar::parse(" 7 ") == Scalar(7));
  CHECK(Scalar::parse("4/-6") == Scalar(-2, 3));
  CHECK(Scalar::parse("12345678901234567890/3").str() == "4115226300411522630");
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(Scalar::parse("1/0"), dag::ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), dag::ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), dag::ParseError);
  CHECK_THROWS_AS(Scalar::parse("1.2.3"), dag::ParseError);
  CHECK_THROWS_AS(Scalar::parse("."), dag::ParseError);
  CHECK_THROWS_AS(Scalar::parse("1e5"), dag::ParseError);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS(Scalar(1) / Scalar(0));
  CHECK_THROWS(Scalar(0).inverse());
  CHECK_THROWS(Scalar(1, 0));
}

TEST_CASE("det3 examples") {
  CHECK(dag::det3({0, -5, 1}, {1, -8, 1}, {2, -11, 1}) == 0);
  CHECK(dag::det3({0, 0, 1}, {1, 0, 1}, {0, 1, 1}) == 1);
  CHECK(dag::det3({5, 5, 1}, {6, 12, 1}, {7, 19, 1}) == 0);
}

TEST_CASE("other_root examples") {
  CHECK(dag::other_root({1, -3, 2}, 1) == 2);
  CHECK(dag::other_root({1, 0, 0}, 0) == 0);
  CHECK(dag::other_root({2, -2, 0}, 0) == 1);
  CHECK_THROWS_AS(dag::other_root({1, -3, 2}, 3), dag::GeometryError);
  CHECK_THROWS_AS(dag::other_root({0, 1, 0}, 0), dag::GeometryError);
}

TEST_CASE("rational_sqrt") {
  CHECK(dag::rational_sqrt(Scalar(9, 4)) == Scalar(3, 2));
  CHECK_FALSE(dag::rational_sqrt(Scalar(2)).has_value());
  CHECK_FALSE(dag::rational_sqrt(Scalar(-4)).has_value());
}

TEST_CASE("field axioms and det3 alternation on random rationals") {
  dag::Sampler s(7, 50);
  for (int i = 0; i < 300; ++i) {
    Scalar a = s.rational(), b = s.rational(), c = s.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == 1);
    CHECK(a - a == 0);

    dag::Row3 r1{s.rational(), s.rational(), s.rational()};
    dag::Row3 r2{s.rational(), s.rational(), s.rational()};
    dag::Row3 r3{s.rational(), s.rational(), s.rational()};
    CHECK(dag::det3(r2, r1, r3) == -dag::det3(r1, r2, r3));
    CHECK(dag::det3(r1, r3, r2) == -dag::det3(r1, r2, r3));

    // Build a quadratic from two chosen roots and recover the second one.
    Scalar k = s.nonzero_rational(), u = s.rational(), v = s.rational();
    QuadraticPoly q{k, -k * (u + v), k * u * v};
    Scalar w = dag::other_root(q, u);
    CHECK(w == v);
    CHECK(q(w) == 0);
  }
}

TEST_CASE("sampler is deterministic and bounded") {
  dag::Sampler s1(dag::hash64(42, 3), 50), s2(dag::hash64(42, 3), 50);
  for (int i = 0; i < 100; ++i) {
    Scalar a = s1.rational();
    CHECK(a == s2.rational());
    CHECK(a.denominator() <= 50);
    CHECK(abs(a.numerator()) <= 50);
    Scalar f = s1.unit_fraction();
    s2.unit_fraction();
    CHECK(f > 0);
    CHECK(f < 1);
  }
  CHECK(dag::hash64(42, 0) != dag::hash64(42, 1));
  CHECK_THROWS(dag::Sampler(1, 1));
}
