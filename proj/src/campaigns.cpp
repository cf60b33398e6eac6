#include <algorithm>
#include <cmath>

#include "dag/equivalence.hpp"
#include "dag/harness.hpp"
#include "dag/theorems.hpp"

namespace dag {

namespace {

struct Checks {
  long n = 0;
  std::string fail;
  double residual = 0.0;

  void expect(bool ok, const std::string& what) {
    ++n;
    if (!ok && fail.empty()) fail = what;
  }

  CheckResult result(TrialStatus good = TrialStatus::pass) const {
    CheckResult r;
    r.checks = n;
    r.residual = residual;
    r.status = fail.empty() ? good : TrialStatus::fail;
    r.note = fail;
    return r;
  }
};

CheckResult skip(const std::string& why) {
  CheckResult r;
  r.status = TrialStatus::skipped;
  r.note = why;
  return r;
}

void require(bool cond, const char* why) {
  if (!cond) throw GeometryError(why);
}

const Point& pt(const Scene& s, const std::string& name) {
  auto it = s.points.find(name);
  if (it == s.points.end()) throw ParseError("scene has no point " + name);
  return it->second;
}

const Parabola& par(const Scene& s, const std::string& name) {
  auto it = s.parabolas.find(name);
  if (it == s.parabolas.end()) throw ParseError("scene has no parabola " + name);
  return it->second;
}

const Scalar& prm(const Scene& s, const std::string& name) {
  auto it = s.params.find(name);
  if (it == s.params.end()) throw ParseError("scene has no param " + name);
  return it->second;
}

long mode(const Scene& s) {
  auto it = s.params.find("mode");
  return it == s.params.end() ? 0 : it->second.numerator().get_si();
}

long int_param(const Scene& s, const std::string& name) {
  const Scalar& v = prm(s, name);
  if (!v.is_integer()) throw ParseError("param " + name + " must be an integer");
  return v.numerator().get_si();
}

Parabola random_parabola(Sampler& s) { return Parabola(s.nonzero_rational(), s.rational(), s.rational()); }

std::vector<Scalar> distinct(Sampler& s, std::size_t n) {
  std::vector<Scalar> out;
  while (out.size() < n) {
    Scalar x = s.rational();
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

Point random_point(Sampler& s) { return {s.rational(), s.rational()}; }

DATriangle triangle(const Scene& s) { return DATriangle(pt(s, "A"), pt(s, "B"), pt(s, "C")); }

void put_triangle(Scene& sc, const Point& a, const Point& b, const Point& c) {
  sc.points["A"] = a;
  sc.points["B"] = b;
  sc.points["C"] = c;
}

Scene random_triangle_scene(Sampler& s) {
  Scene sc;
  put_triangle(sc, random_point(s), random_point(s), random_point(s));
  DATriangle t = triangle(sc);
  (void)t;
  return sc;
}

Scene parabola_triangle_scene(Sampler& s) {
  Scene sc;
  Parabola g = random_parabola(s);
  auto x = distinct(s, 3);
  sc.parabolas.emplace("G", g);
  put_triangle(sc, g.at(x[0]), g.at(x[1]), g.at(x[2]));
  return sc;
}

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

// ---- angle axioms ----

Scene gen_angle_axioms(Sampler& s) {
  Scene sc;
  Point p = random_point(s), a = random_point(s), b = random_point(s), c = random_point(s);
  Scalar t = s.unit_fraction();
  require(a.x != p.x && b.x != p.x && c.x != p.x, "singular ray");
  require(!collinear(a, p, b), "collinear rays");
  require(a.x + t * (b.x - a.x) != p.x, "singular ray to the between point");
  sc.points = {{"P", p}, {"A", a}, {"B", b}, {"C", c}};
  sc.params = {{"t", t}, {"k", s.positive_rational()}, {"lam", s.positive_rational()}};
  return sc;
}

CheckResult check_angle_axioms(const Scene& sc, double) {
  Checks c;
  const Point &p = pt(sc, "P"), &a = pt(sc, "A"), &b = pt(sc, "B"), &q = pt(sc, "C");
  const Scalar &t = prm(sc, "t"), &k = prm(sc, "k"), &lam = prm(sc, "lam");
  auto ang = [](const Point& u, const Point& v, const Point& w) { return difference_angle(u, v, w).value; };
  auto slope = [](const Point& u, const Point& v) { return (v.y - u.y) / (v.x - u.x); };

  const Scalar apb = ang(a, p, b);
  c.expect(apb == slope(p, b) - slope(p, a), "angle is not the slope difference");
  c.expect(ang(b, p, a) == -apb, "A1 antisymmetry");

  // A2: M between A and B on segment AB.
  const Point m{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  c.expect(ang(a, p, m) + ang(m, p, b) == apb, "A2 additivity");

  // Subtractive form for an arbitrary third ray.
  if (q != p) c.expect(ang(a, p, b) == ang(a, p, q) - ang(b, p, q), "subtractive additivity");

  // A3: vanishing exactly on collinear rays.
  const Point along{p.x + lam * (a.x - p.x), p.y + lam * (a.y - p.y)};
  const Point opposite{p.x - lam * (a.x - p.x), p.y - lam * (a.y - p.y)};
  c.expect(ang(a, p, along) == 0, "A3 same ray");
  c.expect(ang(a, p, opposite) == 0, "straight angle is not 0");
  c.expect(apb != 0, "A3 nonzero for non-collinear rays");

  // A4: isotropic scaling and moving A along its ray.
  auto scaled = [&](const Point& u) { return Point{k * u.x, k * u.y}; };
  c.expect(ang(scaled(a), scaled(p), scaled(b)) == apb, "A4 scaling");
  c.expect(ang(along, p, b) == apb, "A4 ray reparametrization");

  // The mean-slope ray halves the angle.
  const Scalar mean = (slope(p, a) + slope(p, b)) / 2;
  const Point h{p.x + 1, p.y + mean};
  c.expect(ang(a, p, h) == ang(h, p, b), "bisection halves");
  c.expect(ang(a, p, h) * 2 == apb, "bisection sum");

  // Vertical angles: A, A2 on one line through P and B, B2 on the other.
  // Under the slope definition the oriented law reads APB = A2 P B2 = -(B2 P A2).
  const Point a2{2 * p.x - a.x, 2 * p.y - a.y};
  const Point b2{2 * p.x - b.x, 2 * p.y - b.y};
  c.expect(ang(a, p, b) == ang(a2, p, b2), "vertical angles");
  c.expect(ang(a, p, b) == -ang(b2, p, a2), "oriented vertical-angle law");
  c.expect(ang(a, p, a2) == 0 && ang(b, p, b2) == 0, "flat angles of the two lines");

  // Singular rays are absorbed.
  const Point up{p.x, p.y + 1};
  c.expect(ang(a, p, up) == 0 && ang(up, p, a) == 0, "absorptive singular ray");

  // Pseudo-norm: symmetric, nonnegative, not definite.
  c.expect(da_norm(a, b) == da_norm(b, a), "norm symmetry");
  c.expect(da_norm(a, b).sign() >= 0, "norm nonnegative");
  c.expect(da_norm(p, up) == 0, "norm of a vertical pair is 0");
  return c.result();
}

// ---- parabolas ----

Scene gen_parabolic_power(Sampler& s) {
  Scene sc;
  Parabola g = random_parabola(s);
  Point p = random_point(s);
  sc.parabolas.emplace("G", g);
  sc.points["P"] = p;
  auto x = distinct(s, 3);
  for (int i = 0; i < 3; ++i) {
    require(x[i] != p.x, "vertical secant");
    sc.points["X" + std::to_string(i + 1)] = g.at(x[i]);
  }
  return sc;
}

CheckResult check_parabolic_power(const Scene& sc, double) {
  Checks c;
  const Parabola& g = par(sc, "G");
  const Point& p = pt(sc, "P");
  const Scalar power = parabolic_power(g, p);
  for (int i = 1; i <= 3; ++i) {
    const Point& x = pt(sc, "X" + std::to_string(i));
    c.expect(g.contains(x), "secant point off the parabola");
    // Line through P and X meets G at roots of kappa t^2 + (beta - m) t + (gamma - y_P + m x_P).
    const Scalar m = (x.y - p.y) / (x.x - p.x);
    const QuadraticPoly q{g.kappa(), g.beta() - m, g.gamma() - p.y + m * p.x};
    const Scalar other = other_root(q, x.x);
    c.expect((x.x - p.x) * (other - p.x) == power, "secant product differs from the power");
  }
  return c.result();
}

Scene gen_iso_angle_locus(Sampler& s) {
  Scene sc;
  auto ab = distinct(s, 2);
  sc.points = {{"A", {ab[0], 0}}, {"B", {ab[1], 0}}};
  sc.params["theta"] = s.nonzero_rational();
  auto x = distinct(s, 10);
  for (int i = 0; i < 10; ++i) {
    require(x[i] != ab[0] && x[i] != ab[1], "sample above an endpoint");
    sc.params["x" + std::to_string(i)] = x[i];
  }
  for (int i = 5; i < 10; ++i) sc.params["dy" + std::to_string(i)] = s.nonzero_rational();
  return sc;
}

CheckResult check_iso_angle_locus(const Scene& sc, double) {
  Checks c;
  const Point &a = pt(sc, "A"), &b = pt(sc, "B");
  const Scalar& theta = prm(sc, "theta");
  const Parabola locus = iso_angle_locus(a, b, theta);
  // Independent form theta/(b-a) (x-a)(x-b).
  auto y = [&](const Scalar& x) { return theta / (b.x - a.x) * (x - a.x) * (x - b.x); };
  for (int i = 0; i < 10; ++i) {
    const Scalar& x = prm(sc, "x" + std::to_string(i));
    c.expect(locus(x) == y(x), "locus formula");
    if (i < 5) {
      c.expect(difference_angle(a, Point{x, y(x)}, b).value == theta, "locus point sees a different angle");
    } else {
      const Point off{x, y(x) + prm(sc, "dy" + std::to_string(i))};
      c.expect(difference_angle(a, off, b).value != theta, "off-locus point sees theta");
    }
  }
  return c.result();
}

Scene gen_tangent_lengths(Sampler& s) {
  Scene sc;
  Parabola g = random_parabola(s);
  sc.parabolas.emplace("G", g);
  auto uv = distinct(s, 2);
  sc.params = {{"u", uv[0]}, {"v", uv[1]}};
  sc.points["P"] = meet(tangent_at(g, uv[0]), tangent_at(g, uv[1])).point();
  return sc;
}

CheckResult check_tangent_lengths(const Scene& sc, double) {
  Checks c;
  const Parabola& g = par(sc, "G");
  const Point& p = pt(sc, "P");
  const Scalar &u = prm(sc, "u"), &v = prm(sc, "v");
  const QuadraticPoly q = tangents_from(g, p);
  c.expect(-q.c1 == 2 * p.x, "root sum is not 2 x_P");
  for (const Scalar& r : {u, v}) {
    c.expect(q.c2 * r * r + q.c1 * r + q.c0 == 0, "contact point is not a root");
    c.expect(tangent_at(g, r).contains(p), "tangent misses P");
  }
  c.expect((u - p.x).abs() == (v - p.x).abs(), "tangent lengths differ");
  return c.result();
}

// ---- triangles ----

CheckResult check_triangle_invariants(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const Parabola circ = circumparabola(t.a(), t.b(), t.c());
  for (Vertex v : kVertices) c.expect(circ.contains(t[v]), "circumparabola misses a vertex");
  // Sorted x and the |kappa| spacing formula.
  std::array<Vertex, 3> order = kVertices;
  std::sort(order.begin(), order.end(), [&](Vertex p, Vertex q) { return t[p].x < t[q].x; });
  const Scalar k = circ.kappa().abs();
  const Scalar left = t[order[0]].x, mid = t[order[1]].x, right = t[order[2]].x;
  c.expect(t.angle(order[0]) == k * (right - mid), "left angle");
  c.expect(t.angle(order[1]) == -k * (right - left), "middle angle");
  c.expect(t.angle(order[2]) == k * (mid - left), "right angle");
  c.expect(t.angle(Vertex::A) + t.angle(Vertex::B) + t.angle(Vertex::C) == 0, "angle sum");
  int negative = 0;
  for (Vertex v : kVertices) negative += t.angle(v).sign() < 0 ? 1 : 0;
  c.expect(negative == 1, "exactly one negative angle");
  // Largest side norm equals the sum of the other two.
  std::array<Scalar, 3> n{(t.b().x - t.c().x).abs(), (t.c().x - t.a().x).abs(), (t.a().x - t.b().x).abs()};
  std::sort(n.begin(), n.end());
  c.expect(n[2] == n[0] + n[1], "triangle equation");
  c.expect(side_norm_equation(t).residual == 0, "side_norm_equation residual");
  return c.result();
}

CheckResult check_bisector_centers(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  for (Vertex v : kVertices) c.expect(bisector_ratio_check(t, v) == 0, "bisector ratio");
  const CenterSet cs = centers(t);
  for (Vertex v : kVertices)
    c.expect(bisector_at(t, v, BisectorMode::interior).contains(cs.incenter), "incenter off a bisector");
  const auto& o = t.by_x();
  c.expect(cs.incenter.x == t[o[1]].x, "incenter not above the middle vertex");
  const MeetResult& left = cs.excenters.at(o[0]);
  const MeetResult& right = cs.excenters.at(o[2]);
  c.expect(left.is_finite() && left.point().x == t[o[2]].x, "left excenter axis");
  c.expect(right.is_finite() && right.point().x == t[o[0]].x, "right excenter axis");
  c.expect(cs.excenters.at(o[1]).is_ideal(), "middle excenter not ideal");
  const Point g{(t.a().x + t.b().x + t.c().x) / 3, (t.a().y + t.b().y + t.c().y) / 3};
  c.expect(cs.centroid == g, "centroid");
  c.expect(cs.bisector_centroid == midpoint(g, cs.tangent_centroid), "G_I is not the midpoint of G and G_T");
  return c.result();
}

// ---- quadrilaterals on a parabola ----

Scene gen_four_on_parabola(Sampler& s) {
  Scene sc;
  Parabola g = random_parabola(s);
  auto x = distinct(s, 4);
  sc.parabolas.emplace("G", g);
  sc.points = {{"A", g.at(x[0])}, {"B", g.at(x[1])}, {"C", g.at(x[2])}, {"D", g.at(x[3])}};
  return sc;
}

CheckResult check_ptolemy(const Scene& sc, double) {
  Checks c;
  c.expect(ptolemy_residual(par(sc, "G"), pt(sc, "A"), pt(sc, "B"), pt(sc, "C"), pt(sc, "D")) == 0, "ptolemy residual");
  return c.result();
}

// Mutation control: the middle term with its sign flipped.
CheckResult check_ptolemy_broken(const Scene& sc, double) {
  Checks c;
  const Scalar a = pt(sc, "A").x, b = pt(sc, "B").x, cc = pt(sc, "C").x, d = pt(sc, "D").x;
  c.expect((b - a) * (d - cc) - (d - a) * (cc - b) - (cc - a) * (d - b) == 0, "broken ptolemy residual");
  return c.result();
}

Scene gen_brahmagupta(Sampler& s) {
  Scene sc;
  Parabola g = random_parabola(s);
  auto x = distinct(s, 3);
  std::sort(x.begin(), x.end());
  const Scalar d = x[1] + x[2] - x[0];
  sc.parabolas.emplace("G", g);
  sc.points = {{"E", g.at(x[0])}, {"A", g.at(x[1])}, {"B", g.at(x[2])}, {"D", g.at(d)}};
  return sc;
}

CheckResult check_brahmagupta(const Scene& sc, double) {
  Checks c;
  const Point &e = pt(sc, "E"), &a = pt(sc, "A"), &b = pt(sc, "B"), &d = pt(sc, "D");
  c.expect(e.x + d.x == a.x + b.x, "generator constraint e + d = a + b");
  c.expect(brahmagupta_check(par(sc, "G"), e, a, b, d) == 0, "meet is not above the midpoint of AB");
  const MeetResult m = meet(line_through(a, d), line_through(e, b));
  c.expect(m.is_finite() && m.point().x * 2 == a.x + b.x, "x_C = (a+b)/2");
  return c.result();
}

Scene gen_trapezoid(Sampler& s) {
  Scene sc;
  const long md = s.integer(0, 4);
  sc.params["mode"] = md;
  if (md <= 2) {
    Parabola g = random_parabola(s);
    auto x = distinct(s, 4);
    if (md == 0) x[3] = x[1] + x[2] - x[0];  // AD || BC
    if (md == 1) x[3] = x[0] + x[1] - x[2];  // AB || CD
    require(x[3] != x[0] && x[3] != x[1] && x[3] != x[2], "repeated x");
    Point d = g.at(x[3]);
    if (md == 2) d.y += s.nonzero_rational();
    sc.points = {{"A", g.at(x[0])}, {"B", g.at(x[1])}, {"C", g.at(x[2])}, {"D", d}};
  } else {
    Point a = random_point(s), b = random_point(s), c = random_point(s);
    require(b.x != c.x, "singular side");
    // Sign +1 gives the trapezoid, -1 the parallelogram.
    const Scalar dx = md == 3 ? b.x - a.x : a.x - b.x;
    const Point d = Line::through(a, slope_between(b, c)).at(c.x + dx);
    sc.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
  }
  return sc;
}

CheckResult check_trapezoid(const Scene& sc, double) {
  Checks c;
  const TrapezoidVerdict v = trapezoid_equivalence(pt(sc, "A"), pt(sc, "B"), pt(sc, "C"), pt(sc, "D"));
  c.expect(v.isosceles_trapezoid == v.inscribed_with_parallel_pair, "trapezoid equivalence");
  if (mode(sc) == 0 || mode(sc) == 1) c.expect(v.inscribed_with_parallel_pair, "forward direction");
  if (mode(sc) == 3) c.expect(v.isosceles_trapezoid, "converse construction not a trapezoid");
  return c.result();
}

Scene gen_intersecting(Sampler& s) {
  Scene sc;
  Parabola g = random_parabola(s);
  auto uv = distinct(s, 2);
  const Scalar k = s.nonzero_rational();
  require(g.kappa() + k != 0, "degenerate second parabola");
  sc.parabolas.emplace("G", g);
  sc.parabolas.emplace("H", Parabola(g.kappa() + k, g.beta() - k * (uv[0] + uv[1]), g.gamma() + k * uv[0] * uv[1]));
  sc.params = {{"mA", s.rational()}, {"mB", s.rational()}};
  return sc;
}

CheckResult check_intersecting(const Scene& sc, double) {
  Checks c;
  const auto r = intersecting_parabolas_check(par(sc, "G"), par(sc, "H"), prm(sc, "mA"), prm(sc, "mB"));
  c.expect(r.residual == 0, "PR and QS not parallel");
  c.expect(((r.r.y - r.p.y) / (r.r.x - r.p.x)) == ((r.s.y - r.q.y) / (r.s.x - r.q.x)), "slope recomputation");
  return c.result();
}

CheckResult check_inscribed_angle(const Scene& sc, double) {
  Checks c;
  const Point &a = pt(sc, "A"), &b = pt(sc, "B"), &cc = pt(sc, "C"), &d = pt(sc, "D");
  c.expect(inscribed_angle_check(par(sc, "G"), a, b, cc, d) == 0, "angle at C differs from angle at D");
  c.expect(difference_angle(a, cc, b) == difference_angle(a, d, b), "direct angle comparison");
  return c.result();
}

Scene gen_parabolic_cyclic(Sampler& s) {
  Scene sc = gen_four_on_parabola(s);
  sc.params["mode"] = s.integer(0, 1);
  if (mode(sc) == 1) sc.points["D"].y += s.nonzero_rational();
  return sc;
}

CheckResult check_parabolic_cyclic(const Scene& sc, double) {
  Checks c;
  const Point &a = pt(sc, "A"), &b = pt(sc, "B"), &cc = pt(sc, "C"), &d = pt(sc, "D");
  const Scalar sum = opposite_angle_sum(a, b, cc, d);
  const bool on = circumparabola(a, b, cc).contains(d);
  c.expect(on == (sum == 0), "opposite-angle sum vs membership");
  c.expect(on == (mode(sc) == 0), "generator mode");
  return c.result();
}

Scene gen_arc_symmetry(Sampler& s) {
  Scene sc;
  auto x = distinct(s, 4);
  std::sort(x.begin(), x.end());
  sc.params = {{"a", x[0]}, {"b", x[1]}, {"p", x[2]}, {"c", x[3]}};
  return sc;
}

CheckResult check_arc_symmetry(const Scene& sc, double) {
  Checks c;
  const auto r = arc_symmetry_check(prm(sc, "a"), prm(sc, "b"), prm(sc, "c"), prm(sc, "p"));
  c.expect(r.conparabolic, "A, B, D, D' not on one parabola");
  c.expect(r.opposite_sum == 0, "opposite-angle sum");
  return c.result();
}

// ---- Miquel ----

Scene gen_miquel_triangle(Sampler& s) {
  Scene sc = random_triangle_scene(s);
  const Point &a = sc.points["A"], &b = sc.points["B"], &c = sc.points["C"];
  auto along = [](const Point& p, const Point& q, const Scalar& t) {
    return Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
  };
  if (s.integer(0, 9) == 0) {
    sc.params["mode"] = 1;
    sc.points["D"] = midpoint(b, c);
    sc.points["E"] = midpoint(c, a);
    sc.points["F"] = midpoint(a, b);
  } else {
    sc.points["D"] = along(b, c, s.unit_fraction());
    sc.points["E"] = along(c, a, s.unit_fraction());
    sc.points["F"] = along(a, b, s.unit_fraction());
  }
  return sc;
}

CheckResult check_miquel_triangle(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const auto r = miquel_triangle(t, pt(sc, "D"), pt(sc, "E"), pt(sc, "F"));
  if (mode(sc) == 1) c.expect(r.m.is_ideal(), "midpoint configuration not ideal");
  if (r.m.is_ideal()) {
    for (const Parabola& p : r.parabolas) c.expect(p.kappa() == r.parabolas[0].kappa(), "ideal M with unequal kappa");
    c.expect(r.cross_check && r.cross_check->is_ideal(), "other pairing disagrees");
    return c.result(TrialStatus::ideal);
  }
  c.expect(r.m.is_finite(), "M neither finite nor ideal");
  if (!r.m.is_finite()) return c.result();
  for (const Parabola& p : r.parabolas) c.expect(p.contains(r.m.point()), "M off a circumparabola");
  for (bool b : r.memberships) c.expect(b, "membership flag");
  c.expect(r.cross_check && *r.cross_check == r.m, "other pairing disagrees");
  return c.result();
}

Scene gen_miquel_quadrilateral(Sampler& s) {
  Scene sc;
  Scalar m[4], k[4];
  for (int i = 0; i < 4; ++i) {
    m[i] = s.rational();
    k[i] = s.rational();
  }
  if (s.integer(0, 9) == 0) {
    // Solve k4 so that C_ABF and C_BCE share kappa; x_A, x_F are linear in k4.
    sc.params["mode"] = 1;
    const CompleteQuadrilateral probe(Line::sloped(m[0], k[0]), Line::sloped(m[1], k[1]), Line::sloped(m[2], k[2]),
                                      Line::sloped(m[3], 0));
    const auto& q = probe.points();
    const Scalar kappa2 = (m[2] - m[1]) / (q[4].x - q[1].x);
    require(kappa2 != 0, "flat parabola");
    const Scalar target = (m[1] - m[0]) / kappa2;
    const Scalar slope = 1 / (m[1] - m[3]) - 1 / (m[0] - m[3]);
    const Scalar base = k[0] / (m[0] - m[3]) - k[1] / (m[1] - m[3]);
    require(slope != 0, "k4 not determined");
    k[3] = (target - base) / slope;
  }
  for (int i = 0; i < 4; ++i) {
    sc.params["m" + std::to_string(i + 1)] = m[i];
    sc.params["k" + std::to_string(i + 1)] = k[i];
  }
  return sc;
}

CompleteQuadrilateral quad(const Scene& sc) {
  auto l = [&](int i) {
    return Line::sloped(prm(sc, "m" + std::to_string(i)), prm(sc, "k" + std::to_string(i)));
  };
  return CompleteQuadrilateral(l(1), l(2), l(3), l(4));
}

CheckResult check_miquel_quadrilateral(const Scene& sc, double) {
  Checks c;
  const auto r = miquel_quadrilateral(quad(sc));
  if (mode(sc) == 1) c.expect(r.m.is_ideal(), "equal-kappa configuration not ideal");
  if (r.m.is_ideal()) {
    c.expect(r.parabolas[0].kappa() == r.parabolas[1].kappa(), "ideal M with unequal kappa");
    return c.result(TrialStatus::ideal);
  }
  c.expect(r.m.is_finite(), "M neither finite nor ideal");
  if (!r.m.is_finite()) return c.result();
  c.expect(r.eliminant_degree == 2, "finite M from a non-quadratic eliminant");
  for (const Parabola& p : r.parabolas) c.expect(p.contains(r.m.point()), "M off a circumparabola");
  for (bool b : r.memberships) c.expect(b, "membership flag");
  return c.result();
}

// ---- Ceva / Menelaus ----

Point on_side(const DATriangle& t, Vertex v, const Scalar& x) { return t.side_opposite(v).at(x); }

// Directed x-ratio (p - u)/(w - p).
Scalar ratio(const Scalar& u, const Scalar& p, const Scalar& w) {
  require(p != w && p != u, "side point at a vertex");
  return (p - u) / (w - p);
}

// x on side UW whose ratio (x - u)/(w - x) equals r.
Scalar solve_ratio(const Scalar& u, const Scalar& w, const Scalar& r) {
  require(r != -1, "ratio -1 has no finite point");
  return (u + r * w) / (1 + r);
}

Scene gen_ceva(Sampler& s) {
  Scene sc = random_triangle_scene(s);
  const DATriangle t = triangle(sc);
  const long md = s.integer(0, 2);
  sc.params["mode"] = md;
  Point d, e, f;
  if (md == 0) {
    const Point x = random_point(s);
    auto foot = [&](Vertex v) {
      require(x != t[v], "cevian through a vertex");
      return meet(line_through(t[v], x), t.side_opposite(v)).point();
    };
    d = foot(Vertex::A);
    e = foot(Vertex::B);
    f = foot(Vertex::C);
  } else {
    d = on_side(t, Vertex::A, s.rational());
    e = on_side(t, Vertex::B, s.rational());
    if (md == 1) {
      f = on_side(t, Vertex::C, s.rational());
    } else {
      const Scalar r = 1 / (ratio(t.b().x, d.x, t.c().x) * ratio(t.c().x, e.x, t.a().x));
      f = on_side(t, Vertex::C, solve_ratio(t.a().x, t.b().x, r));
    }
  }
  sc.points["D"] = d;
  sc.points["E"] = e;
  sc.points["F"] = f;
  return sc;
}

CheckResult check_ceva(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const Point &d = pt(sc, "D"), &e = pt(sc, "E"), &f = pt(sc, "F");
  const Scalar prod = ceva_product(t, d, e, f);
  const Scalar direct = ratio(t.b().x, d.x, t.c().x) * ratio(t.c().x, e.x, t.a().x) * ratio(t.a().x, f.x, t.b().x);
  c.expect(prod == direct, "ceva product recomputation");
  const bool conc = concurrent(line_through(t.a(), d), line_through(t.b(), e), line_through(t.c(), f));
  c.expect((prod == 1) == conc, "product 1 iff concurrent");
  if (mode(sc) != 1) c.expect(conc, "constructed configuration not concurrent");
  return c.result();
}

Scene gen_menelaus(Sampler& s) {
  Scene sc = random_triangle_scene(s);
  const DATriangle t = triangle(sc);
  const long md = s.integer(0, 2);
  sc.params["mode"] = md;
  Point d, e, f;
  if (md == 0) {
    const Line l = Line::sloped(s.rational(), s.rational());
    d = meet(l, t.side_opposite(Vertex::A)).point();
    e = meet(l, t.side_opposite(Vertex::B)).point();
    f = meet(l, t.side_opposite(Vertex::C)).point();
  } else {
    d = on_side(t, Vertex::A, s.rational());
    e = on_side(t, Vertex::B, s.rational());
    if (md == 1) {
      f = on_side(t, Vertex::C, s.rational());
    } else {
      const Scalar r = -1 / (ratio(t.b().x, d.x, t.c().x) * ratio(t.c().x, e.x, t.a().x));
      f = on_side(t, Vertex::C, solve_ratio(t.a().x, t.b().x, r));
    }
  }
  sc.points["D"] = d;
  sc.points["E"] = e;
  sc.points["F"] = f;
  return sc;
}

CheckResult check_menelaus(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const Point &d = pt(sc, "D"), &e = pt(sc, "E"), &f = pt(sc, "F");
  const Scalar prod = menelaus_product(t, d, e, f);
  const Scalar direct = ratio(t.b().x, d.x, t.c().x) * ratio(t.c().x, e.x, t.a().x) * ratio(t.a().x, f.x, t.b().x);
  c.expect(prod == direct, "menelaus product recomputation");
  const bool col = collinearity_det(d, e, f) == 0;
  c.expect((prod == -1) == col, "product -1 iff collinear");
  if (mode(sc) != 1) c.expect(col, "constructed configuration not collinear");
  return c.result();
}

// ---- Simson family ----

Scene gen_simson(Sampler& s) {
  Scene sc;
  const bool std_chart = s.integer(0, 1) == 0;
  Parabola g = std_chart ? Parabola::standard() : random_parabola(s);
  auto x = distinct(s, 4);
  sc.parabolas.emplace("G", g);
  put_triangle(sc, g.at(x[0]), g.at(x[1]), g.at(x[2]));
  sc.points["P"] = g.at(x[3]);
  sc.params["m"] = s.rational();
  return sc;
}

CheckResult check_simson(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const Parabola& g = par(sc, "G");
  const Scalar& m = prm(sc, "m");
  const SimsonResult r = simson(t, m);
  c.expect(r.collinearity == 0, "feet not collinear");
  c.expect(collinearity_det(r.feet[0], r.feet[1], r.feet[2]) == 0, "feet determinant");
  c.expect(!r.line.is_singular() && r.line.m() == m, "line slope is not m");
  const Scalar a = t.a().x, b = t.b().x, cc = t.c().x;
  const Scalar u = (m - g.beta()) / g.kappa();
  const Scalar k = g.kappa() * (u * (a + b + cc) - u * u - (a * b + b * cc + cc * a)) + g.gamma();
  c.expect(!r.line.is_singular() && r.line.k() == k, "intercept formula");
  if (g == Parabola::standard())
    c.expect(!r.line.is_singular() && r.line.k() == m * (a + b + cc) - m * m - (a * b + b * cc + cc * a),
             "intercept in the kappa=1 chart");
  for (int i = 0; i < 3; ++i) c.expect(r.line.contains(r.feet[i]), "foot off the Simson line");

  // Perpendicular feet from a curve point all sit above x_P.
  const Point& p = pt(sc, "P");
  const NaiveSimson n = naive_simson(t, g, p);
  for (Vertex v : kVertices) {
    c.expect(n.feet[ix(v)].x == p.x, "naive foot not above P");
    c.expect(t.side_opposite(v).contains(n.feet[ix(v)]), "naive foot off its side");
  }
  return c.result();
}

CheckResult check_midpoint_lemma(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const MidpointLemma r = midpoint_lemma_check(t);
  if (r.ideal) return skip("a bisector meet is ideal");
  for (Vertex v : kVertices) {
    const Point foot = t.side_opposite(v).at(t[v].x);
    c.expect(r.feet[ix(v)] == foot, "foot of a vertex");
    c.expect(r.meets[ix(v)].is_finite() && r.meets[ix(v)].point() == midpoint(t[v], foot), "meet is not the midpoint");
    c.expect(r.residuals[ix(v)] == Point{0, 0}, "lemma residual");
  }
  return c.result();
}

Scene gen_dabct(Sampler& s) {
  Scene sc = random_triangle_scene(s);
  require(!triangle(sc).is_da_isosceles(), "DA-isosceles");
  return sc;
}

CheckResult check_dabct(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  if (t.is_da_isosceles()) return skip("DA-isosceles input is inadmissible");
  const DABCTResult r = dabct(t);
  for (bool b : r.concurrent) c.expect(b, "side, bisector and feet chord not concurrent");
  c.expect(r.collinearity == 0, "L points not collinear");
  c.expect(collinearity_det(r.l_points[0], r.l_points[1], r.l_points[2]) == 0, "L determinant");
  for (Vertex v : kVertices) {
    c.expect(t.side_opposite(v).contains(r.l_points[ix(v)]), "L off its side");
    c.expect(bisector_at(t, v, BisectorMode::positive).contains(r.l_points[ix(v)]), "L off its bisector");
  }
  return c.result();
}

Scene gen_dabct_isosceles(Sampler& s) {
  Scene sc;
  const Scalar a = s.rational(), h = s.nonzero_rational();
  Parabola g = random_parabola(s);
  put_triangle(sc, g.at(a), g.at(a + h), g.at(a + 2 * h));
  return sc;
}

// ---- isogonals and divisions ----

Scene gen_mn_division(Sampler& s) {
  Scene sc;
  sc.params = {{"a", s.rational()}, {"b", s.rational()}, {"p", s.rational()}, {"m", s.integer(1, 9)},
               {"n", s.integer(1, 9)}};
  return sc;
}

CheckResult check_mn_division(const Scene& sc, double) {
  Checks c;
  const long m = int_param(sc, "m"), n = int_param(sc, "n");
  const auto r = mn_division_check(prm(sc, "a"), prm(sc, "b"), prm(sc, "p"), m, n);
  c.expect(r.residuals[0] == 0, "A-side division");
  c.expect(r.residuals[1] == 0, "B-side division");
  c.expect(r.c == (n * prm(sc, "a") + m * prm(sc, "b")) / (m + n), "division point");
  return c.result();
}

Scene gen_isogonal(Sampler& s) {
  Scene sc = random_triangle_scene(s);
  const DATriangle t = triangle(sc);
  const long md = s.integer(0, 3) == 0 ? 1 : 0;
  sc.params["mode"] = md;
  const Slope la = cevian_from_fraction(t, Vertex::A, s.unit_fraction(), Vertex::B);
  const Line l_a = Line::through(t.a(), la);
  Point x;
  if (md == 0) {
    const Slope lc = cevian_from_fraction(t, Vertex::C, s.unit_fraction(), Vertex::A);
    x = meet(l_a, Line::through(t.c(), lc)).point();
  } else {
    x = meet(l_a, Line::singular(t.b().x)).point();
  }
  require(x != t.a() && x != t.b() && x != t.c(), "cevians meet at a vertex");
  sc.points["X"] = x;
  return sc;
}

CheckResult check_isogonal(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const Point& x = pt(sc, "X");
  const std::array<Slope, 3> cev{slope_between(t.a(), x), slope_between(t.b(), x), slope_between(t.c(), x)};
  if (mode(sc) == 1) c.expect(cev[1].is_singular(), "B cevian should be singular");
  const IsogonalVerdict v = isogonal_concurrency_check(t, cev);
  c.expect(v.original_concurrent, "cevians not concurrent");
  c.expect(v.isogonal_concurrent, "isogonal cevians not concurrent");
  c.expect(v.involution, "isogonal map not an involution");
  for (Vertex u : kVertices) {
    const Slope& sl = cev[ix(u)];
    const Slope iso = isogonal_slope(t, u, sl);
    c.expect(isogonal_slope(t, u, iso) == sl, "double reflection");
    if (sl.is_finite()) {
      const auto [p, q] = t.others(u);
      c.expect(iso == Slope::finite(t.side_slope(u, p) + t.side_slope(u, q) - sl.value()), "reflection formula");
    }
  }
  if (v.original_ceva) c.expect(*v.original_ceva == 1, "ceva of concurrent cevians");
  if (v.isogonal_ceva) c.expect(*v.isogonal_ceva == 1, "ceva of isogonal cevians");
  return c.result();
}

Scene gen_spl(Sampler& s) {
  Scene sc;
  sc.params = {{"p", s.rational()}, {"x0", s.rational()}, {"q1", s.rational()}, {"q2", s.rational()},
               {"lam", s.rational()}};
  const Scalar q = prm(sc, "lam") * prm(sc, "q1") + (1 - prm(sc, "lam")) * prm(sc, "q2");
  require(prm(sc, "p") != prm(sc, "q1") && prm(sc, "p") != prm(sc, "q2") && prm(sc, "p") != q, "degenerate chord");
  return sc;
}

CheckResult check_spl(const Scene& sc, double) {
  Checks c;
  const Scalar &p = prm(sc, "p"), &x0 = prm(sc, "x0"), &q1 = prm(sc, "q1"), &q2 = prm(sc, "q2"), &lam = prm(sc, "lam");
  const Scalar q = lam * q1 + (1 - lam) * q2;
  auto chord_height = [&](const Scalar& r) {
    return line_through({p, p * p}, {r, r * r}).at(x0).y;
  };
  c.expect(singular_projective_length(p, x0, q1) == chord_height(q1), "chord height");
  c.expect(singular_projective_length(p, x0, q) ==
               lam * singular_projective_length(p, x0, q1) + (1 - lam) * singular_projective_length(p, x0, q2),
           "affine in q");
  return c.result();
}

// ---- equivalence hierarchy ----

Scene gen_equivalence(Sampler& s) {
  Scene sc;
  Parabola g = random_parabola(s), h = random_parabola(s);
  auto x = distinct(s, 3);
  const long md = s.integer(0, 2);
  sc.params["mode"] = md;
  sc.parabolas.emplace("G", g);
  sc.parabolas.emplace("H", h);
  put_triangle(sc, g.at(x[0]), g.at(x[1]), g.at(x[2]));
  Scalar k = md == 2 ? Scalar(1) : s.positive_rational();
  const Scalar off = s.rational();
  auto y = md == 1 ? distinct(s, 3) : std::vector<Scalar>{k * x[0] + off, k * x[1] + off, k * x[2] + off};
  sc.points["A2"] = h.at(y[0]);
  sc.points["B2"] = h.at(y[1]);
  sc.points["C2"] = h.at(y[2]);
  Scalar w = s.positive_rational();
  require(w != 1, "witness ratio 1");
  sc.params["k"] = w;
  sc.params["off"] = off;
  DATriangle(sc.points["A2"], sc.points["B2"], sc.points["C2"]);
  return sc;
}

CheckResult check_equivalence(const Scene& sc, double) {
  Checks c;
  const DATriangle t1 = triangle(sc);
  const DATriangle t2(pt(sc, "A2"), pt(sc, "B2"), pt(sc, "C2"));
  const auto v = classify_pair(t1, t2);
  const auto back = classify_pair(t2, t1);
  c.expect(v.chain_holds(), "chain invariants");
  c.expect(back.chain_holds(), "chain invariants reversed");
  c.expect(v.sim_sss == back.sim_sss && v.sim_aa == back.sim_aa && v.da_congruent == back.da_congruent,
           "relations not symmetric");
  if (mode(sc) != 1) c.expect(v.sim_sss, "scaled copy not SSS-similar");
  if (v.sim_sss && back.sim_sss) c.expect(*v.ratio * *back.ratio == 1, "ratio inverse");

  // AA check against the sorted-x angle formula.
  bool aa = true;
  for (Vertex u : kVertices) aa = aa && t1.angle(u) == t2.angle(u);
  c.expect(v.sim_aa == aa, "AA verdict");

  // Same x-spacing on H: norm-congruent, so the coefficient bridge applies.
  const Parabola& h = par(sc, "H");
  const Scalar& off = prm(sc, "off");
  const DATriangle t3(h.at(t1.a().x + off), h.at(t1.b().x + off), h.at(t1.c().x + off));
  const auto bridge = coefficient_bridge(t1, t3);
  c.expect(bridge.holds(), "DA-congruence iff |kappa| equal");

  // Witness family: SSS-similar but not AA-similar.
  const auto w = sss_not_aa_witness(par(sc, "G"), t1.a().x, t1.b().x, t1.c().x, prm(sc, "k"));
  const auto wv = classify_pair(w[0], w[1]);
  c.expect(wv.sim_sss && !wv.sim_aa && !wv.sim_sas_signed, "witness family");
  return c.result();
}

Scene gen_shift(Sampler& s) {
  Scene sc = parabola_triangle_scene(s);
  sc.params = {{"t1", s.rational()}, {"t2", s.rational()}};
  return sc;
}

CheckResult check_shift(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const Scalar &a = prm(sc, "t1"), &b = prm(sc, "t2");
  c.expect(shift(t, 0) == t, "identity");
  c.expect(shift(shift(t, a), b) == shift(t, a + b), "composition");
  c.expect(shift(shift(t, a), -a) == t, "inverse");
  const auto v = classify_pair(t, shift(t, a));
  c.expect(v.da_congruent, "shift not a DA-congruence");
  const Scalar dx = a / t.circumparabola().kappa();
  c.expect(shift(t, a).a().x == t.a().x + dx, "shift displacement");
  return c.result();
}

CheckResult check_diag(const Scene& sc, double) {
  Checks c;
  const auto r = diag_section_similarity(pt(sc, "A"), pt(sc, "B"), pt(sc, "C"), pt(sc, "D"));
  c.expect(r.xab_xdc, "XAB ~ XDC");
  c.expect(r.xbc_xad, "XBC ~ XAD");
  return c.result();
}

Scene gen_final(Sampler& s) {
  Scene sc = parabola_triangle_scene(s);
  const Parabola& g = sc.parabolas.at("G");
  Parabola d(g.kappa() * (s.integer(0, 1) ? 1 : -1), s.rational(), s.rational());
  const Scalar total = s.rational();
  sc.parabolas.emplace("H", d);
  sc.points["A2"] = d.at(total - sc.points["A"].x);
  sc.points["B2"] = d.at(total - sc.points["B"].x);
  sc.points["C2"] = d.at(total - sc.points["C"].x);
  final_theorem_feet(triangle(sc), DATriangle(sc.points["A2"], sc.points["B2"], sc.points["C2"]));
  return sc;
}

CheckResult check_final(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const DATriangle tp(pt(sc, "A2"), pt(sc, "B2"), pt(sc, "C2"));
  const FinalFeet f = final_theorem_feet(t, tp);
  c.expect(f.collinearity == 0, "feet not collinear");
  for (Vertex v : kVertices) c.expect(f.feet[ix(v)].x == t[v].x, "foot not above its vertex");
  if (f.menelaus) c.expect(*f.menelaus == -1, "menelaus product on the primed triangle");
  return c.result();
}

Scene gen_intro(Sampler& s) {
  Scene sc = random_triangle_scene(s);
  const Scalar xa = s.rational();
  const Point &a = sc.points["A"], &b = sc.points["B"], &c = sc.points["C"];
  const Scalar xb = xa - (b.x - a.x);
  sc.params = {{"xa", xa}, {"xb", xb}, {"xc", xb - (c.x - b.x)}};
  return sc;
}

CheckResult check_intro(const Scene& sc, double) {
  Checks c;
  const DATriangle t = triangle(sc);
  const auto r = intro_observation_check(t, {prm(sc, "xa"), prm(sc, "xb"), prm(sc, "xc")});
  c.expect(r.hypothesis, "spacing hypothesis");
  c.expect(r.collinearity == 0, "feet not collinear");
  return c.result();
}

// ---- Euclidean export ----

Scene gen_euclid(Sampler& s) {
  Scene sc;
  for (const char* n : {"A", "B", "C"}) {
    const double x = s.real(-10, 10), y = s.real(-10, 10);
    sc.points[n] = Point{Scalar(mpq_class(x)), Scalar(mpq_class(y))};
  }
  return sc;
}

CheckResult check_euclid(const Scene& sc, double tol) {
  Checks c;
  auto e = [&](const char* n) { return EuclidPoint{pt(sc, n).x.to_double(), pt(sc, n).y.to_double()}; };
  const EuclidReport r = euclid_bisector_collinearity(e("A"), e("B"), e("C"));
  c.residual = r.worst();
  c.expect(std::isfinite(r.collinearity) && r.collinearity < tol, "J points not collinear");
  for (double v : r.concurrency) c.expect(std::isfinite(v) && v < tol, "concurrency residual");
  c.expect(std::isfinite(r.trilinear) && r.trilinear < tol, "barycentric cross-check");
  return c.result();
}

// The generator keeps drawing until the check itself accepts the
// configuration's preconditions.
std::function<Scene(Sampler&)> probed(std::function<Scene(Sampler&)> gen,
                                      std::function<CheckResult(const Scene&, double)> check) {
  return [gen, check](Sampler& s) {
    Scene sc = gen(s);
    check(sc, 1e-9);
    return sc;
  };
}

std::vector<TheoremSpec> build_registry() {
  std::vector<TheoremSpec> r;
  auto add = [&](std::string id, std::string summary, std::function<Scene(Sampler&)> gen,
                 std::function<CheckResult(const Scene&, double)> check, bool probe = true) {
    TheoremSpec t;
    t.id = std::move(id);
    t.summary = std::move(summary);
    t.generate = probe ? probed(gen, check) : gen;
    t.check = check;
    r.push_back(std::move(t));
  };
  add("angle_axioms", "angle axioms, subtractive additivity, vertical and straight angles, pseudo-norm", gen_angle_axioms,
      check_angle_axioms, false);
  add("parabolic_power", "three secants through P agree with the parabolic power", gen_parabolic_power,
      check_parabolic_power, false);
  add("iso_angle_locus", "points on the locus see AB under theta, points off it do not", gen_iso_angle_locus,
      check_iso_angle_locus, false);
  add("tangent_lengths", "the two tangents from an exterior point have equal DA length", gen_tangent_lengths,
      check_tangent_lengths);
  add("triangle_invariants", "angle sum 0, one negative angle, side-norm equation", random_triangle_scene,
      check_triangle_invariants, false);
  add("bisector_centers", "bisector ratio, incenter, excenters, bisector centroid", random_triangle_scene,
      check_bisector_centers);
  add("ptolemy", "Ptolemy identity for four points on a parabola", gen_four_on_parabola, check_ptolemy);
  add("brahmagupta", "parallel-chord meet lies above the midpoint of AB", gen_brahmagupta, check_brahmagupta);
  add("trapezoid", "isosceles trapezoid iff inscribed with a parallel pair", gen_trapezoid, check_trapezoid);
  add("intersecting_parabolas", "chords PR and QS are parallel", gen_intersecting, check_intersecting);
  add("inscribed_angle", "a chord is seen under one angle from the whole parabola", gen_four_on_parabola,
      check_inscribed_angle);
  add("parabolic_cyclic", "opposite angles sum to 0 iff the four points share a parabola", gen_parabolic_cyclic,
      check_parabolic_cyclic);
  add("arc_symmetry", "A, B, D, D' lie on one parabola", gen_arc_symmetry, check_arc_symmetry);
  add("miquel_triangle", "three circumparabolas through the side points share M", gen_miquel_triangle,
      check_miquel_triangle);
  add("miquel_quadrilateral", "four circumparabolas of a complete quadrilateral share M", gen_miquel_quadrilateral,
      check_miquel_quadrilateral);
  add("ceva", "ceva product 1 iff the cevians are concurrent", gen_ceva, check_ceva);
  add("menelaus", "menelaus product -1 iff the points are collinear", gen_menelaus, check_menelaus);
  add("simson", "Simson feet are collinear on a line of slope m", gen_simson, check_simson);
  add("midpoint_lemma", "bisector meets are midpoints of vertex and foot", parabola_triangle_scene,
      check_midpoint_lemma);
  add("dabct", "L points on the sides are collinear", gen_dabct, check_dabct);
  add("mn_division", "m:n division of chords on the standard parabola", gen_mn_division, check_mn_division);
  add("isogonal", "isogonal cevians of concurrent cevians are concurrent", gen_isogonal, check_isogonal);
  add("singular_projective_length", "chord height is affine in the far endpoint", gen_spl, check_spl);
  add("equivalence_chain", "congruence and similarity hierarchy, coefficient bridge, witness family", gen_equivalence,
      check_equivalence);
  add("shift_group", "shifts along the circumparabola form a group of DA-congruences", gen_shift, check_shift);
  add("diag_section", "diagonal sections of an inscribed quadrilateral are AA-similar", gen_four_on_parabola,
      check_diag);
  add("final_theorem", "feet of T on the sides of its reversed copy are collinear", gen_final, check_final);
  add("intro_observation", "feet above the primed x-coordinates are collinear", gen_intro, check_intro);
  add("euclid_export", "Euclidean bisector feet meets are collinear (binary64)", gen_euclid, check_euclid);
  r.back().approximate = true;
  add("ptolemy_broken", "mutation control: Ptolemy with a flipped sign", gen_four_on_parabola, check_ptolemy_broken,
      false);
  r.back().control = true;
  add("dabct_isosceles", "control: isosceles-only generator, every trial inadmissible", gen_dabct_isosceles,
      check_dabct, false);
  r.back().control = true;
  return r;
}

}  // namespace

const std::vector<TheoremSpec>& theorem_registry() {
  static const std::vector<TheoremSpec> registry = build_registry();
  return registry;
}

const TheoremSpec& find_theorem(const std::string& id) {
  for (const TheoremSpec& t : theorem_registry())
    if (t.id == id) return t;
  throw std::invalid_argument("unknown theorem id: " + id);
}

}  // namespace dag
