#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dag/gauge.hpp"
#include "dag/scalar.hpp"

namespace dag {

/// y = kappa*x^2 + beta*x + gamma with kappa != 0; the axis is parallel to d.
class Parabola {
 public:
  /// Throws GeometryError when kappa == 0.
  Parabola(Scalar kappa, Scalar beta, Scalar gamma);

  static Parabola standard() { return Parabola(1, 0, 0); }

  const Scalar& kappa() const { return kappa_; }
  const Scalar& beta() const { return beta_; }
  const Scalar& gamma() const { return gamma_; }

  Scalar operator()(const Scalar& x) const { return (kappa_ * x + beta_) * x + gamma_; }
  Point at(const Scalar& x) const { return {x, (*this)(x)}; }
  bool contains(const Point& p) const { return (*this)(p.x) == p.y; }

  /// Slope of the chord between the curve points above u and v; the
  /// tangent slope when u == v.
  Scalar chord_slope(const Scalar& u, const Scalar& v) const { return kappa_ * (u + v) + beta_; }
  Line chord(const Scalar& u, const Scalar& v) const;

  std::string str() const;

  friend bool operator==(const Parabola&, const Parabola&) = default;

 private:
  Scalar kappa_;
  Scalar beta_;
  Scalar gamma_;
};

/// Unique vertical-axis parabola through three points (Lagrange form).
/// Throws for a shared x-coordinate or a collinear triple.
Parabola circumparabola(const Point& a, const Point& b, const Point& c);

bool contains(const Parabola& p, const Point& pt);

/// (kappa*x^2 + beta*x + gamma - y)/kappa: the secant-invariant product
/// (alpha - x_P)(beta - x_P).
Scalar parabolic_power(const Parabola& p, const Point& pt);

/// Locus of points seeing the reference-line segment AB under the oriented
/// angle theta: y = theta/(b-a) (x-a)(x-b).
Parabola iso_angle_locus(const Point& a, const Point& b, const Scalar& theta);

Line tangent_at(const Parabola& p, const Scalar& x0);

/// Monic quadratic whose roots are the contact parameters of the two
/// tangents from an exterior point. Root sum is exactly 2*x_P, so the two
/// tangent DA lengths agree without solving for (possibly irrational) roots.
QuadraticPoly tangents_from(const Parabola& p, const Point& pt);

/// Other intersection of the slope-m line through `pt` (on p) with p.
Point second_intersection(const Parabola& p, const Point& pt, const Scalar& m);

struct ParabolaMeet {
  std::vector<MeetResult> meets;
  /// Quadratic eliminant with a non-square discriminant and no known root.
  bool irrational = false;
  QuadraticPoly eliminant;
};

/// Intersections of two parabolas. A known common point lets the second
/// meet be extracted by Vieta, keeping everything rational.
ParabolaMeet parabola_meet(const Parabola& p1, const Parabola& p2, const std::optional<Point>& known_common = {});

/// Angle AB is seen under from C minus the angle from D; zero by the
/// inscribed-angle property.
Scalar inscribed_angle_check(const Parabola& p, const Point& a, const Point& b, const Point& c, const Point& d);

/// theta_B + theta_D of the quadrilateral ABCD in the slope-signed
/// convention: -(Slp BC - Slp BA) + (Slp DC - Slp DA). Equals
/// (kappa_ACD - kappa_ABC)(x_C - x_A), so it vanishes iff the four points
/// share one vertical-axis parabola.
Scalar opposite_angle_sum(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace dag
