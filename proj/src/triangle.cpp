#include "dag/triangle.hpp"

#include <algorithm>

namespace dag {

std::string to_string(Vertex v) {
  switch (v) {
    case Vertex::A: return "A";
    case Vertex::B: return "B";
    case Vertex::C: return "C";
  }
  return "?";
}

namespace {

Point meet_point(const Line& l1, const Line& l2, const char* what) {
  MeetResult m = meet(l1, l2);
  if (!m.is_finite()) throw GeometryError(std::string(what) + ": expected a finite meet, got " + m.str());
  return m.point();
}

Point centroid_of(const Point& p, const Point& q, const Point& r) {
  const Scalar third(1, 3);
  return {(p.x + q.x + r.x) * third, (p.y + q.y + r.y) * third};
}

}  // namespace

DATriangle::DATriangle(Point a, Point b, Point c)
    : pts_{std::move(a), std::move(b), std::move(c)}, parabola_(dag::circumparabola(pts_[0], pts_[1], pts_[2])) {
  // circumparabola already rejected shared x and collinear triples.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) slopes_[i][j] = slope_between(pts_[i], pts_[j]).value();
    }
  }
  order_ = kVertices;
  std::sort(order_.begin(), order_.end(), [&](Vertex u, Vertex v) { return pts_[idx(u)].x < pts_[idx(v)].x; });

  for (Vertex v : kVertices) {
    const auto [p, q] = others(v);
    Scalar mag = (side_slope(v, q) - side_slope(v, p)).abs();
    angles_[idx(v)] = v == order_[1] ? -mag : mag;
  }

  if (!(angles_[0] + angles_[1] + angles_[2]).is_zero()) throw GeometryError("DATriangle: angle sum is not zero");
  int negatives = 0;
  for (const Scalar& s : angles_) negatives += s.sign() < 0 ? 1 : 0;
  if (negatives != 1) throw GeometryError("DATriangle: expected exactly one negative angle");
  if (!side_norm_equation(*this).residual.is_zero()) throw GeometryError("DATriangle: triangle equation fails");
}

std::array<Vertex, 2> DATriangle::others(Vertex v) const {
  switch (v) {
    case Vertex::A: return {Vertex::B, Vertex::C};
    case Vertex::B: return {Vertex::C, Vertex::A};
    case Vertex::C: return {Vertex::A, Vertex::B};
  }
  throw GeometryError("bad vertex");
}

const Scalar& DATriangle::side_slope(Vertex u, Vertex v) const {
  if (u == v) throw GeometryError("side_slope: same vertex");
  return slopes_[idx(u)][idx(v)];
}

Line DATriangle::side_opposite(Vertex v) const {
  const auto [p, q] = others(v);
  return Line::through((*this)[p], Slope::finite(side_slope(p, q)));
}

std::array<Scalar, 3> DATriangle::side_norms() const {
  return {da_norm(b(), c()), da_norm(c(), a()), da_norm(a(), b())};
}

bool DATriangle::is_da_isosceles() const {
  const auto n = side_norms();
  return n[0] == n[1] || n[1] == n[2] || n[0] == n[2];
}

SideNormEquation side_norm_equation(const DATriangle& t) {
  SideNormEquation out{t.side_norms(), Scalar(0)};
  const auto& n = out.norms;
  const Scalar largest = max(n[0], max(n[1], n[2]));
  out.residual = largest - (n[0] + n[1] + n[2] - largest);
  return out;
}

Scalar positive_bisector_slope(const DATriangle& t, Vertex v) {
  const auto [p, q] = t.others(v);
  return (t.side_slope(v, p) + t.side_slope(v, q)) * Scalar(1, 2);
}

Line bisector_at(const DATriangle& t, Vertex v, BisectorMode mode) {
  if (mode == BisectorMode::interior && v == t.negative_vertex()) return Line::singular(t[v].x);
  return Line::through(t[v], Slope::finite(positive_bisector_slope(t, v)));
}

Scalar bisector_ratio_check(const DATriangle& t, Vertex v) {
  const auto [p, q] = t.others(v);
  const Point d = meet_point(bisector_at(t, v, BisectorMode::interior), t.side_opposite(v), "bisector_ratio_check");
  return da_norm(t[p], d) * da_norm(t[v], t[q]) - da_norm(d, t[q]) * da_norm(t[v], t[p]);
}

Point centroid(const DATriangle& t) { return centroid_of(t.a(), t.b(), t.c()); }

CenterSet centers(const DATriangle& t) {
  const Vertex left = t.by_x()[0];
  const Vertex mid = t.by_x()[1];
  const Vertex right = t.by_x()[2];
  auto interior = [&](Vertex v) { return bisector_at(t, v, BisectorMode::interior); };
  auto positive = [&](Vertex v) { return bisector_at(t, v, BisectorMode::positive); };

  const Point incenter = meet_point(interior(left), interior(right), "incenter");
  if (!interior(mid).contains(incenter)) throw GeometryError("centers: interior bisectors are not concurrent");

  // Excenter opposite an outer vertex: its interior bisector with the
  // external ones at the other two (positive mode at the middle vertex,
  // the singular line at the other outer vertex).
  std::map<Vertex, MeetResult> excenters;
  const Point i_left = meet_point(positive(left), positive(mid), "excenter");
  const Point i_right = meet_point(positive(right), positive(mid), "excenter");
  if (i_left.x != t[right].x || i_right.x != t[left].x) throw GeometryError("centers: excenter off its singular line");
  excenters.emplace(left, MeetResult::at(i_left));
  excenters.emplace(right, MeetResult::at(i_right));
  excenters.emplace(mid, meet(interior(mid), Line::singular(t[left].x)));

  const Parabola& p = t.circumparabola();
  auto tangent_vertex = [&](Vertex v) {
    const auto [u, w] = t.others(v);
    return meet_point(tangent_at(p, t[u].x), tangent_at(p, t[w].x), "tangent triangle");
  };
  DATriangle tangent(tangent_vertex(Vertex::A), tangent_vertex(Vertex::B), tangent_vertex(Vertex::C));
  DATriangle bisector(incenter, i_left, i_right);
  const Point g = centroid(t);
  const Point gt = centroid(tangent);
  const Point gi = centroid(bisector);
  return CenterSet{incenter, std::move(excenters), g, std::move(tangent), std::move(bisector), gt, gi};
}

Point foot_of_perpendicular(const Point& p, const Line& l) {
  if (l.is_singular()) throw GeometryError("foot_of_perpendicular: singular target line");
  return l.at(p.x);
}

CircumOrtho circum_ortho_at_infinity(const DATriangle& t) {
  const Scalar half(1, 2);
  std::array<Scalar, 3> xs{(t.b().x + t.c().x) * half, (t.c().x + t.a().x) * half, (t.a().x + t.b().x) * half};
  MeetResult circ = meet(Line::singular(xs[0]), Line::singular(xs[1]));
  MeetResult ortho = meet(Line::singular(t.a().x), Line::singular(t.b().x));
  return {std::move(circ), std::move(ortho), std::move(xs)};
}

NaiveSimson naive_simson(const DATriangle& t, const Parabola& p, const Point& pt) {
  for (Vertex v : kVertices) {
    if (!p.contains(t[v])) throw GeometryError("naive_simson: vertex not on parabola");
    if (t[v] == pt) throw GeometryError("naive_simson: point coincides with a vertex");
  }
  if (!p.contains(pt)) throw GeometryError("naive_simson: point not on parabola");
  NaiveSimson out{{foot_of_perpendicular(pt, t.side_opposite(Vertex::A)),
                   foot_of_perpendicular(pt, t.side_opposite(Vertex::B)),
                   foot_of_perpendicular(pt, t.side_opposite(Vertex::C))},
                  Line::singular(pt.x)};
  return out;
}

SimsonResult simson(const DATriangle& t, const Scalar& m) {
  const Parabola& p = t.circumparabola();
  std::array<Point, 3> ks;
  std::array<Point, 3> hs;
  for (Vertex v : kVertices) {
    const auto i = static_cast<std::size_t>(v);
    ks[i] = second_intersection(p, t[v], m);
    hs[i] = foot_of_perpendicular(ks[i], t.side_opposite(v));
  }
  const Scalar& a = t.a().x;
  const Scalar& b = t.b().x;
  const Scalar& c = t.c().x;
  const Scalar u = (m - p.beta()) / p.kappa();
  Scalar predicted = p.kappa() * (u * (a + b + c) - u * u - (a * b + b * c + c * a)) + p.gamma();
  Line line = line_through(hs[0], hs[1]);
  Scalar det = collinearity_det(hs[0], hs[1], hs[2]);
  return {ks, hs, std::move(line), std::move(predicted), std::move(det)};
}

MidpointLemma midpoint_lemma_check(const DATriangle& t) {
  MidpointLemma out;
  std::array<Line, 3> ell{bisector_at(t, Vertex::A, BisectorMode::positive),
                          bisector_at(t, Vertex::B, BisectorMode::positive),
                          bisector_at(t, Vertex::C, BisectorMode::positive)};
  for (Vertex v : kVertices) {
    const auto i = static_cast<std::size_t>(v);
    const auto [p, q] = t.others(v);
    out.meets[i] = meet(ell[static_cast<std::size_t>(p)], ell[static_cast<std::size_t>(q)]);
    out.feet[i] = foot_of_perpendicular(t[v], t.side_opposite(v));
    if (!out.meets[i].is_finite()) {
      out.ideal = true;
      continue;
    }
    const Point mid = midpoint(t[v], out.feet[i]);
    out.residuals[i] = {out.meets[i].point().x - mid.x, out.meets[i].point().y - mid.y};
  }
  return out;
}

DABCTResult dabct(const DATriangle& t) {
  if (t.is_da_isosceles()) throw GeometryError("dabct: DA-isosceles triangle");
  std::array<Point, 3> feet;
  for (Vertex v : kVertices) feet[static_cast<std::size_t>(v)] = foot_of_perpendicular(t[v], t.side_opposite(v));

  DABCTResult out{};
  for (Vertex v : kVertices) {
    const auto i = static_cast<std::size_t>(v);
    const auto [p, q] = t.others(v);
    const Line side = t.side_opposite(v);
    const Line ell = bisector_at(t, v, BisectorMode::positive);
    out.l_points[i] = meet_point(side, ell, "dabct");
    const Line chord = line_through(feet[static_cast<std::size_t>(p)], feet[static_cast<std::size_t>(q)]);
    out.concurrent[i] = chord.contains(out.l_points[i]);
  }
  out.collinearity = collinearity_det(out.l_points[0], out.l_points[1], out.l_points[2]);
  out.line = line_through(out.l_points[0], out.l_points[1]);
  return out;
}

}  // namespace dag
