#include "dag/gauge.hpp"

#include <ostream>

namespace dag {

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << "(" << p.x << ", " << p.y << ")"; }

Point midpoint(const Point& a, const Point& b) {
  const Scalar half(1, 2);
  return {(a.x + b.x) * half, (a.y + b.y) * half};
}

void Gauge::validate() const {
  const Scalar det = reference_direction.x * projective_direction.y - reference_direction.y * projective_direction.x;
  if (det.is_zero()) throw GeometryError("degenerate gauge: reference and projective directions are dependent");
}

Point Gauge::to_chart(const Point& p) const {
  validate();
  // Solve p - origin = u * reference + v * projective (Cramer's rule).
  const Vector2& r = reference_direction;
  const Vector2& d = projective_direction;
  const Scalar det = r.x * d.y - r.y * d.x;
  const Scalar dx = p.x - origin.x;
  const Scalar dy = p.y - origin.y;
  return {(dx * d.y - dy * d.x) / det, (r.x * dy - r.y * dx) / det};
}

Point Gauge::from_chart(const Point& p) const {
  validate();
  return {origin.x + p.x * reference_direction.x + p.y * projective_direction.x,
          origin.y + p.x * reference_direction.y + p.y * projective_direction.y};
}

std::vector<Point> normalize_chart(const Gauge& g, std::span<const Point> pts) {
  g.validate();
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back(g.to_chart(p));
  return out;
}

const Scalar& Slope::value() const {
  if (singular_) throw GeometryError("singular slope has no finite value");
  return value_;
}

std::string Slope::str() const { return singular_ ? std::string("d_inf") : value_.str(); }

Line Line::through(const Point& p, const Slope& s) {
  if (s.is_singular()) return singular(p.x);
  return sloped(s.value(), p.y - s.value() * p.x);
}

const Scalar& Line::m() const {
  if (singular_) throw GeometryError("singular line has no finite slope");
  return m_;
}

const Scalar& Line::k() const {
  if (singular_) throw GeometryError("singular line has no intercept");
  return k_;
}

const Scalar& Line::x0() const {
  if (!singular_) throw GeometryError("sloped line has no x0");
  return k_;
}

bool Line::contains(const Point& p) const {
  if (singular_) return p.x == k_;
  return p.y == m_ * p.x + k_;
}

Point Line::at(const Scalar& x) const {
  if (singular_) throw GeometryError("cannot evaluate a singular line at an x-coordinate");
  return {x, m_ * x + k_};
}

std::string Line::str() const {
  if (singular_) return "x = " + k_.str();
  return "y = " + m_.str() + "*x + " + k_.str();
}

std::ostream& operator<<(std::ostream& os, const Line& l) { return os << l.str(); }

const Point& MeetResult::point() const {
  if (const auto* a = std::get_if<At>(&v_)) return a->point;
  throw GeometryError("meet is not a finite point: " + str());
}

const Slope& MeetResult::direction() const {
  if (const auto* i = std::get_if<Ideal>(&v_)) return i->direction;
  throw GeometryError("meet is not an ideal point: " + str());
}

std::string MeetResult::str() const {
  struct Visitor {
    std::string operator()(const At& a) const { return "At(" + a.point.x.str() + ", " + a.point.y.str() + ")"; }
    std::string operator()(const Ideal& i) const { return "Ideal(" + i.direction.str() + ")"; }
    std::string operator()(const Coincident&) const { return "Coincident"; }
    std::string operator()(const Empty&) const { return "Empty"; }
  };
  return std::visit(Visitor{}, v_);
}

std::ostream& operator<<(std::ostream& os, const MeetResult& m) { return os << m.str(); }

Slope slope_between(const Point& a, const Point& b) {
  if (a == b) throw GeometryError("slope_between: coincident points");
  if (a.x == b.x) return Slope::singular();
  return Slope::finite((b.y - a.y) / (b.x - a.x));
}

DAAngle difference_angle(const Point& a, const Point& p, const Point& b) {
  if (p == a || p == b) throw GeometryError("difference_angle: vertex coincides with an endpoint");
  const Slope pa = slope_between(p, a);
  const Slope pb = slope_between(p, b);
  // Absorptive boundary: any ray along d contributes a zero angle.
  if (pa.is_singular() || pb.is_singular()) return {Scalar(0)};
  return {pb.value() - pa.value()};
}

Scalar da_norm(const Point& a, const Point& b) { return (b.x - a.x).abs(); }

Scalar directed_norm(const Point& a, const Point& b) { return b.x - a.x; }

Line line_through(const Point& a, const Point& b) { return Line::through(a, slope_between(a, b)); }

MeetResult meet(const Line& l1, const Line& l2) {
  if (l1.is_singular() && l2.is_singular()) {
    if (l1.x0() == l2.x0()) return MeetResult::coincident();
    return MeetResult::ideal(Slope::singular());
  }
  if (l1.is_singular()) return MeetResult::at(l2.at(l1.x0()));
  if (l2.is_singular()) return MeetResult::at(l1.at(l2.x0()));
  if (l1.m() == l2.m()) {
    if (l1.k() == l2.k()) return MeetResult::coincident();
    return MeetResult::ideal(Slope::finite(l1.m()));
  }
  const Scalar x = (l2.k() - l1.k()) / (l1.m() - l2.m());
  return MeetResult::at(l1.at(x));
}

Scalar collinearity_det(const Point& a, const Point& b, const Point& c) {
  return det3({a.x, a.y, Scalar(1)}, {b.x, b.y, Scalar(1)}, {c.x, c.y, Scalar(1)});
}

bool collinear(const Point& a, const Point& b, const Point& c) { return collinearity_det(a, b, c).is_zero(); }

}  // namespace dag
