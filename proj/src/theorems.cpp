#include "dag/theorems.hpp"

#include <algorithm>
#include <cmath>

namespace dag {

namespace {

void require_on(const Parabola& p, std::initializer_list<const Point*> pts, const char* what) {
  for (const Point* pt : pts) {
    if (!p.contains(*pt)) throw GeometryError(std::string(what) + ": point not on parabola");
  }
}

void require_distinct_x(std::initializer_list<const Point*> pts, const char* what) {
  std::vector<const Point*> v(pts);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i]->x == v[j]->x) throw GeometryError(std::string(what) + ": singular side or diagonal");
    }
  }
}

Point finite_meet(const Line& l1, const Line& l2, const char* what) {
  MeetResult m = meet(l1, l2);
  if (!m.is_finite()) throw GeometryError(std::string(what) + ": meet is " + m.str());
  return m.point();
}

// Directed ratio XY/YZ along a side, measured on x.
Scalar directed_ratio(const Point& x, const Point& y, const Point& z) {
  return directed_norm(x, y) / directed_norm(y, z);
}

Scalar side_product(const DATriangle& t, const Point& d, const Point& e, const Point& f, const char* what) {
  const std::array<std::pair<Vertex, const Point*>, 3> feet{{{Vertex::A, &d}, {Vertex::B, &e}, {Vertex::C, &f}}};
  for (const auto& [v, pt] : feet) {
    if (!t.side_opposite(v).contains(*pt)) throw GeometryError(std::string(what) + ": point not on its side line");
    const auto [p, q] = t.others(v);
    if (pt->x == t[p].x || pt->x == t[q].x) throw GeometryError(std::string(what) + ": point at a vertex");
  }
  return directed_ratio(t.b(), d, t.c()) * directed_ratio(t.c(), e, t.a()) * directed_ratio(t.a(), f, t.b());
}

}  // namespace

Scalar ptolemy_residual(const Parabola& p, const Point& a, const Point& b, const Point& c, const Point& d) {
  require_on(p, {&a, &b, &c, &d}, "ptolemy_residual");
  auto len = [](const Point& u, const Point& v) { return directed_norm(u, v); };
  return len(a, b) * len(c, d) + len(a, d) * len(b, c) - len(a, c) * len(b, d);
}

Scalar brahmagupta_check(const Parabola& p, const Point& e, const Point& a, const Point& b, const Point& d) {
  require_on(p, {&e, &a, &b, &d}, "brahmagupta_check");
  if (!(e.x < a.x && a.x < b.x && b.x < d.x)) throw GeometryError("brahmagupta_check: expected x_E < x_A < x_B < x_D");
  if (slope_between(d, e) != slope_between(a, b)) throw GeometryError("brahmagupta_check: DE is not parallel to AB");
  const Point c = finite_meet(line_through(a, d), line_through(e, b), "brahmagupta_check");
  return c.x - (a.x + b.x) * Scalar(1, 2);
}

TrapezoidVerdict trapezoid_equivalence(const Point& a, const Point& b, const Point& c, const Point& d) {
  require_distinct_x({&a, &b, &c, &d}, "trapezoid_equivalence");
  const bool ab_cd = slope_between(a, b) == slope_between(c, d);
  const bool bc_da = slope_between(b, c) == slope_between(d, a);
  TrapezoidVerdict v;
  if (ab_cd != bc_da) {
    v.isosceles_trapezoid = ab_cd ? da_norm(b, c) == da_norm(d, a) : da_norm(a, b) == da_norm(c, d);
  }
  if (!collinear(a, b, c)) {
    v.inscribed_with_parallel_pair = circumparabola(a, b, c).contains(d) && (ab_cd || bc_da);
  }
  return v;
}

IntersectingParabolas intersecting_parabolas_check(const Parabola& gamma, const Parabola& delta, const Scalar& m_a,
                                                   const Scalar& m_b) {
  const ParabolaMeet pm = parabola_meet(gamma, delta);
  if (pm.irrational) throw GeometryError("intersecting_parabolas_check: irrational intersection");
  if (pm.meets.size() != 2 || !pm.meets[0].is_finite() || !pm.meets[1].is_finite()) {
    throw GeometryError("intersecting_parabolas_check: parabolas do not meet in two finite points");
  }
  IntersectingParabolas out;
  out.a = pm.meets[0].point();
  out.b = pm.meets[1].point();
  out.p = second_intersection(gamma, out.a, m_a);
  out.q = second_intersection(delta, out.a, m_a);
  out.r = second_intersection(gamma, out.b, m_b);
  out.s = second_intersection(delta, out.b, m_b);
  if (out.p == out.r || out.q == out.s) throw GeometryError("intersecting_parabolas_check: tangency degeneracy");
  out.residual = slope_between(out.p, out.r).value() - slope_between(out.q, out.s).value();
  return out;
}

ArcSymmetry arc_symmetry_check(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& p) {
  if (!(a < b && b < p && p < c)) throw GeometryError("arc_symmetry_check: expected a < b < p < c");
  const Parabola par = Parabola::standard();
  const Point pa = par.at(a), pb = par.at(b), pc = par.at(c);
  const Point pp = par.at(p), pq = par.at(Scalar(2) * c - p);
  ArcSymmetry out;
  out.d = finite_meet(line_through(pb, pc), line_through(pa, pp), "arc_symmetry_check");
  out.d_prime = finite_meet(line_through(pc, pa), line_through(pb, pq), "arc_symmetry_check");
  out.opposite_sum = opposite_angle_sum(pa, pb, out.d, out.d_prime);
  out.conparabolic = out.opposite_sum.is_zero();
  return out;
}

Scalar ceva_product(const DATriangle& t, const Point& d, const Point& e, const Point& f) {
  return side_product(t, d, e, f, "ceva_product");
}

Scalar menelaus_product(const DATriangle& t, const Point& d, const Point& e, const Point& f) {
  return side_product(t, d, e, f, "menelaus_product");
}

bool concurrent(const Line& l1, const Line& l2, const Line& l3) {
  const MeetResult m = meet(l1, l2);
  if (m.is_finite()) return l3.contains(m.point());
  if (m.is_ideal()) return l3.slope() == m.direction();
  return true;
}

namespace {

// Second common point of p1 and p2 given a shared point; Ideal for equal kappa.
MeetResult second_meet(const Parabola& p1, const Parabola& p2, const Point& shared, int* degree) {
  const ParabolaMeet pm = parabola_meet(p1, p2, shared);
  if (degree) *degree = pm.eliminant.degree();
  if (pm.meets.size() == 1 && pm.meets[0].is_coincident()) throw GeometryError("Miquel: coincident parabolas");
  if (pm.meets.size() == 1) return pm.meets[0];  // double root: M is the shared point
  return pm.meets[1];
}

bool on_or_consistent(const Parabola& p, const Parabola& ref, const MeetResult& m) {
  if (m.is_finite()) return p.contains(m.point());
  return p.kappa() == ref.kappa();
}

}  // namespace

MiquelResult miquel_triangle(const DATriangle& t, const Point& d, const Point& e, const Point& f) {
  const Parabola c_aef = circumparabola(t.a(), e, f);
  const Parabola c_bfd = circumparabola(t.b(), f, d);
  const Parabola c_cde = circumparabola(t.c(), d, e);
  MiquelResult out;
  out.parabolas = {c_aef, c_bfd, c_cde};
  out.m = second_meet(c_aef, c_bfd, f, &out.eliminant_degree);
  out.memberships.push_back(on_or_consistent(c_cde, c_aef, out.m));
  out.cross_check = second_meet(c_aef, c_cde, e, nullptr);
  return out;
}

CompleteQuadrilateral::CompleteQuadrilateral(Line ab, Line bc, Line cd, Line da)
    : lines_{std::move(ab), std::move(bc), std::move(cd), std::move(da)} {
  for (const Line& l : lines_) {
    if (l.is_singular()) throw GeometryError("CompleteQuadrilateral: singular line");
  }
  const auto& [l_ab, l_bc, l_cd, l_da] = lines_;
  pts_ = {finite_meet(l_da, l_ab, "A"), finite_meet(l_ab, l_bc, "B"), finite_meet(l_bc, l_cd, "C"),
          finite_meet(l_cd, l_da, "D"), finite_meet(l_ab, l_cd, "E"), finite_meet(l_bc, l_da, "F")};
}

MiquelResult miquel_quadrilateral(const CompleteQuadrilateral& q) {
  const auto& [a, b, c, d, e, f] = q.points();
  const Parabola c_abf = circumparabola(a, b, f);
  const Parabola c_bce = circumparabola(b, c, e);
  const Parabola c_cdf = circumparabola(c, d, f);
  const Parabola c_dae = circumparabola(d, a, e);
  MiquelResult out;
  out.parabolas = {c_abf, c_bce, c_cdf, c_dae};
  out.m = second_meet(c_abf, c_bce, b, &out.eliminant_degree);
  out.memberships.push_back(on_or_consistent(c_cdf, c_abf, out.m));
  out.memberships.push_back(on_or_consistent(c_dae, c_abf, out.m));
  return out;
}

Scalar singular_projective_length(const Scalar& p, const Scalar& x0, const Scalar& q) {
  if (p == q) throw GeometryError("singular_projective_length: p = q");
  return (p + q) * x0 - p * q;
}

MnDivision mn_division_check(const Scalar& a, const Scalar& b, const Scalar& p, long m, long n) {
  if (m <= 0 || n <= 0) throw GeometryError("mn_division_check: m and n must be positive");
  if (a == b || a == p || b == p) throw GeometryError("mn_division_check: a, b, p must be distinct");
  MnDivision out;
  out.c = (Scalar(n) * a + Scalar(m) * b) / Scalar(m + n);
  if (out.c == p) throw GeometryError("mn_division_check: chord PC is singular");
  const Scalar& c = out.c;
  out.a_c = {a, singular_projective_length(p, a, c)};
  out.a_b = {a, singular_projective_length(p, a, b)};
  out.b_c = {b, singular_projective_length(p, b, c)};
  out.b_a = {b, singular_projective_length(p, b, a)};
  const Scalar ya = a * a, yb = b * b;
  out.residuals[0] = Scalar(n) * (out.a_c.y - ya) - Scalar(m) * (out.a_b.y - out.a_c.y);
  out.residuals[1] = Scalar(m) * (out.b_c.y - yb) - Scalar(n) * (out.b_a.y - out.b_c.y);
  return out;
}

Slope cevian_from_fraction(const DATriangle& t, Vertex v, const Scalar& alpha, Vertex from) {
  const auto [p, q] = t.others(v);
  if (from != p && from != q) throw GeometryError("cevian_from_fraction: base must be another vertex");
  const Vertex to = from == p ? q : p;
  const Scalar& m_from = t.side_slope(v, from);
  const Scalar& m_to = t.side_slope(v, to);
  return Slope::finite(m_from + alpha * (m_to - m_from));
}

Slope isogonal_slope(const DATriangle& t, Vertex v, const Slope& s) {
  if (s.is_singular()) return s;
  const auto [p, q] = t.others(v);
  return Slope::finite(t.side_slope(v, p) + t.side_slope(v, q) - s.value());
}

IsogonalVerdict isogonal_concurrency_check(const DATriangle& t, const std::array<Slope, 3>& cevians) {
  std::array<Line, 3> orig, iso;
  IsogonalVerdict out;
  out.involution = true;
  for (Vertex v : kVertices) {
    const auto i = static_cast<std::size_t>(v);
    const Slope s_iso = isogonal_slope(t, v, cevians[i]);
    out.involution = out.involution && isogonal_slope(t, v, s_iso) == cevians[i];
    orig[i] = Line::through(t[v], cevians[i]);
    iso[i] = Line::through(t[v], s_iso);
  }
  out.original_concurrent = concurrent(orig[0], orig[1], orig[2]);
  out.isogonal_concurrent = concurrent(iso[0], iso[1], iso[2]);

  auto ceva_of = [&](const std::array<Line, 3>& ls) -> std::optional<Scalar> {
    std::array<Point, 3> feet;
    for (Vertex v : kVertices) {
      const auto i = static_cast<std::size_t>(v);
      const MeetResult m = meet(ls[i], t.side_opposite(v));
      if (!m.is_finite()) return std::nullopt;
      const auto [p, q] = t.others(v);
      if (m.point().x == t[p].x || m.point().x == t[q].x) return std::nullopt;
      feet[i] = m.point();
    }
    return ceva_product(t, feet[0], feet[1], feet[2]);
  };
  out.original_ceva = ceva_of(orig);
  out.isogonal_ceva = ceva_of(iso);
  return out;
}

// ---- Euclidean export ----

namespace {

using H = std::array<double, 3>;

H cross(const H& u, const H& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

H unit(const H& u) {
  const double n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  if (n == 0) return u;
  return {u[0] / n, u[1] / n, u[2] / n};
}

double det(const H& u, const H& v, const H& w) {
  const H c = cross(v, w);
  return u[0] * c[0] + u[1] * c[1] + u[2] * c[2];
}

double ndet(const H& u, const H& v, const H& w) { return std::abs(det(unit(u), unit(v), unit(w))); }

H pt(const EuclidPoint& p) { return {p.x, p.y, 1.0}; }

EuclidPoint sub(const EuclidPoint& p, const EuclidPoint& q) { return {p.x - q.x, p.y - q.y}; }

EuclidPoint unit_dir(const EuclidPoint& from, const EuclidPoint& to) {
  const EuclidPoint d = sub(to, from);
  const double n = std::hypot(d.x, d.y);
  return {d.x / n, d.y / n};
}

H line_dir(const EuclidPoint& p, const EuclidPoint& d) { return cross(pt(p), {d.x, d.y, 0.0}); }

H weighted(double wa, const EuclidPoint& a, double wb, const EuclidPoint& b, double wc, const EuclidPoint& c) {
  return {wa * a.x + wb * b.x + wc * c.x, wa * a.y + wb * b.y + wc * c.y, wa + wb + wc};
}

}  // namespace

double EuclidReport::worst() const {
  return std::max({collinearity, concurrency[0], concurrency[1], concurrency[2], trilinear});
}

EuclidReport euclid_bisector_collinearity(const EuclidPoint& a, const EuclidPoint& b, const EuclidPoint& c,
                                          double min_area) {
  const EuclidPoint ab = sub(b, a), ac = sub(c, a);
  const double area = 0.5 * std::abs(ab.x * ac.y - ab.y * ac.x);
  if (!(area >= min_area)) throw GeometryError("euclid_bisector_collinearity: degenerate triangle");

  const EuclidPoint u_ab = unit_dir(a, b), u_ac = unit_dir(a, c);
  const EuclidPoint u_ba = unit_dir(b, a), u_bc = unit_dir(b, c);
  const EuclidPoint u_ca = unit_dir(c, a), u_cb = unit_dir(c, b);
  const H ell_a = line_dir(a, {u_ab.x + u_ac.x, u_ab.y + u_ac.y});
  const H ell_b = line_dir(b, {u_ba.x - u_bc.x, u_ba.y - u_bc.y});
  const H ell_c = line_dir(c, {u_ca.x + u_cb.x, u_ca.y + u_cb.y});

  const H line_ab = cross(pt(a), pt(b)), line_bc = cross(pt(b), pt(c)), line_ca = cross(pt(c), pt(a));
  const H d = cross(ell_b, ell_c), e = cross(ell_c, ell_a), f = cross(ell_a, ell_b);
  const H h_a = cross(line_bc, cross(pt(a), d));
  const H h_b = cross(line_ca, cross(pt(b), e));
  const H h_c = cross(line_ab, cross(pt(c), f));
  const H j_a = cross(line_bc, ell_a), j_b = cross(line_ca, ell_b), j_c = cross(line_ab, ell_c);

  EuclidReport r;
  r.collinearity = ndet(j_a, j_b, j_c);
  r.concurrency = {ndet(line_bc, ell_a, cross(h_b, h_c)), ndet(line_ca, ell_b, cross(h_c, h_a)),
                   ndet(line_ab, ell_c, cross(h_a, h_b))};

  const double la = std::hypot(b.x - c.x, b.y - c.y);
  const double lb = std::hypot(c.x - a.x, c.y - a.y);
  const double lc = std::hypot(a.x - b.x, a.y - b.y);
  auto dev = [](const H& u, const H& v) {
    const H w = cross(unit(u), unit(v));
    return std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  };
  const H e_a = weighted(0, a, lb, b, lc, c);
  const H e_b = weighted(la, a, 0, b, -lc, c);
  const H e_c = weighted(la, a, lb, b, 0, c);
  r.trilinear = std::max({dev(j_a, e_a), dev(j_b, e_b), dev(j_c, e_c)});
  r.j_b_at_infinity = std::abs(unit(j_b)[2]) < 1e-12;
  return r;
}

std::array<Scalar, 3> euclid_trilinear_identity() {
  const std::array<Row3, 3> j{{{0, 1, 1}, {1, 0, -1}, {1, 1, 0}}};
  std::array<Scalar, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = j[i][0] - j[i][1] + j[i][2];
  return out;
}

}  // namespace dag
