#include "dag/parabola.hpp"

namespace dag {

Parabola::Parabola(Scalar kappa, Scalar beta, Scalar gamma)
    : kappa_(std::move(kappa)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (kappa_.is_zero()) throw GeometryError("parabola with kappa = 0");
}

Line Parabola::chord(const Scalar& u, const Scalar& v) const {
  // y = s*x + k through (u, f(u)); for the standard parabola k = -uv.
  const Scalar s = chord_slope(u, v);
  return Line::sloped(s, (*this)(u) - s * u);
}

std::string Parabola::str() const {
  return "y = " + kappa_.str() + "*x^2 + " + beta_.str() + "*x + " + gamma_.str();
}

Parabola circumparabola(const Point& a, const Point& b, const Point& c) {
  if (a.x == b.x || b.x == c.x || a.x == c.x) throw GeometryError("circumparabola: two points share an x-coordinate");
  const Scalar wa = a.y / ((a.x - b.x) * (a.x - c.x));
  const Scalar wb = b.y / ((b.x - a.x) * (b.x - c.x));
  const Scalar wc = c.y / ((c.x - a.x) * (c.x - b.x));
  const Scalar kappa = wa + wb + wc;
  if (kappa.is_zero()) throw GeometryError("circumparabola: collinear points");
  const Scalar beta = -(wa * (b.x + c.x) + wb * (a.x + c.x) + wc * (a.x + b.x));
  const Scalar gamma = wa * b.x * c.x + wb * a.x * c.x + wc * a.x * b.x;
  return Parabola(kappa, beta, gamma);
}

bool contains(const Parabola& p, const Point& pt) { return p.contains(pt); }

Scalar parabolic_power(const Parabola& p, const Point& pt) { return (p(pt.x) - pt.y) / p.kappa(); }

Parabola iso_angle_locus(const Point& a, const Point& b, const Scalar& theta) {
  if (!a.y.is_zero() || !b.y.is_zero()) throw GeometryError("iso_angle_locus: endpoints must lie on the reference line");
  if (a.x == b.x) throw GeometryError("iso_angle_locus: equal endpoints");
  if (theta.is_zero()) throw GeometryError("iso_angle_locus: zero angle degenerates to the line AB");
  const Scalar k = theta / (b.x - a.x);
  return Parabola(k, -k * (a.x + b.x), k * a.x * b.x);
}

Line tangent_at(const Parabola& p, const Scalar& x0) {
  return Line::sloped(Scalar(2) * p.kappa() * x0 + p.beta(), p.gamma() - p.kappa() * x0 * x0);
}

QuadraticPoly tangents_from(const Parabola& p, const Point& pt) {
  // Tangent at t passes through P: kappa t^2 - 2 kappa x_P t + (y_P - beta x_P - gamma) = 0.
  if (parabolic_power(p, pt).sign() <= 0) throw GeometryError("tangents_from: point is on or inside the parabola");
  return {Scalar(1), Scalar(-2) * pt.x, (pt.y - p.beta() * pt.x - p.gamma()) / p.kappa()};
}

Point second_intersection(const Parabola& p, const Point& pt, const Scalar& m) {
  if (!p.contains(pt)) throw GeometryError("second_intersection: point not on parabola");
  return p.at((m - p.beta()) / p.kappa() - pt.x);
}

ParabolaMeet parabola_meet(const Parabola& p1, const Parabola& p2, const std::optional<Point>& known_common) {
  ParabolaMeet out;
  out.eliminant = {p1.kappa() - p2.kappa(), p1.beta() - p2.beta(), p1.gamma() - p2.gamma()};
  const QuadraticPoly& q = out.eliminant;
  if (p1 == p2) {
    out.meets.push_back(MeetResult::coincident());
    return out;
  }
  if (known_common && (!p1.contains(*known_common) || !p2.contains(*known_common))) {
    throw GeometryError("parabola_meet: known point is not on both parabolas");
  }
  switch (q.degree()) {
    case 2: {
      if (known_common) {
        out.meets.push_back(MeetResult::at(*known_common));
        const Scalar x2 = other_root(q, known_common->x);
        if (x2 != known_common->x) out.meets.push_back(MeetResult::at(p1.at(x2)));
        return out;
      }
      const Scalar disc = q.discriminant();
      if (disc.sign() < 0) {
        out.meets.push_back(MeetResult::empty());
        return out;
      }
      const auto root = rational_sqrt(disc);
      if (!root) {
        out.irrational = true;
        return out;
      }
      const Scalar two_c2 = Scalar(2) * q.c2;
      const Scalar x1 = (-q.c1 - *root) / two_c2;
      const Scalar x2 = (-q.c1 + *root) / two_c2;
      out.meets.push_back(MeetResult::at(p1.at(min(x1, x2))));
      if (x1 != x2) out.meets.push_back(MeetResult::at(p1.at(max(x1, x2))));
      return out;
    }
    case 1:
      out.meets.push_back(MeetResult::at(p1.at(-q.c0 / q.c1)));
      out.meets.push_back(MeetResult::ideal(Slope::singular()));
      return out;
    default:
      out.meets.push_back(MeetResult::empty());
      return out;
  }
}

Scalar inscribed_angle_check(const Parabola& p, const Point& a, const Point& b, const Point& c, const Point& d) {
  for (const Point* pt : {&a, &b, &c, &d}) {
    if (!p.contains(*pt)) throw GeometryError("inscribed_angle_check: point not on parabola");
  }
  if (a == b) throw GeometryError("inscribed_angle_check: A = B");
  return (difference_angle(a, c, b) - difference_angle(a, d, b)).value;
}

Scalar opposite_angle_sum(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point* pts[] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i]->x == pts[j]->x) throw GeometryError("opposite_angle_sum: singular side or diagonal");
    }
  }
  const Scalar theta_b = -(slope_between(b, c).value() - slope_between(b, a).value());
  const Scalar theta_d = slope_between(d, c).value() - slope_between(d, a).value();
  return theta_b + theta_d;
}

}  // namespace dag
