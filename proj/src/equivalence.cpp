#include "dag/equivalence.hpp"

#include "dag/theorems.hpp"

namespace dag {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

void validate(const Correspondence& c) {
  std::array<bool, 3> seen{};
  for (Vertex v : c) seen[ix(v)] = true;
  if (!(seen[0] && seen[1] && seen[2])) throw GeometryError("correspondence is not a permutation");
}

}  // namespace

Correspondence inverse(const Correspondence& c) {
  validate(c);
  Correspondence out{};
  for (Vertex v : kVertices) out[ix(c[ix(v)])] = v;
  return out;
}

bool EquivalenceVerdict::chain_holds() const {
  return (!da_congruent || norm_congruent) && (sim_sas_signed == sim_aa) && (!sim_aa || sim_sss);
}

EquivalenceVerdict classify_pair(const DATriangle& t1, const DATriangle& t2, const Correspondence& corr) {
  validate(corr);
  const auto n1 = t1.side_norms();
  const auto n2 = t2.side_norms();
  std::array<Scalar, 3> ratio;
  EquivalenceVerdict v;
  v.norm_congruent = true;
  v.sim_aa = true;
  for (Vertex u : kVertices) {
    const Vertex w = corr[ix(u)];
    ratio[ix(u)] = n2[ix(w)] / n1[ix(u)];
    v.angle_gaps[ix(u)] = t2.angle(w) - t1.angle(u);
    v.norm_congruent = v.norm_congruent && n2[ix(w)] == n1[ix(u)];
    v.sim_aa = v.sim_aa && v.angle_gaps[ix(u)].is_zero();
  }
  v.sim_sss = ratio[0] == ratio[1] && ratio[1] == ratio[2];
  if (v.sim_sss) v.ratio = ratio[0];
  for (Vertex u : kVertices) {
    const auto [p, q] = t1.others(u);
    if (ratio[ix(p)] == ratio[ix(q)] && v.angle_gaps[ix(u)].is_zero()) v.sim_sas_signed = true;
  }
  v.da_congruent = v.norm_congruent && v.sim_aa;
  return v;
}

CoefficientBridge coefficient_bridge(const DATriangle& t1, const DATriangle& t2, const Correspondence& corr) {
  const EquivalenceVerdict v = classify_pair(t1, t2, corr);
  if (!v.norm_congruent) throw GeometryError("coefficient_bridge: triangles are not norm-congruent");
  return {v.da_congruent, t1.circumparabola().kappa().abs() == t2.circumparabola().kappa().abs()};
}

DATriangle shift(const DATriangle& t, const Scalar& theta) {
  const Parabola& p = t.circumparabola();
  const Scalar dx = theta / p.kappa();
  return DATriangle(p.at(t.a().x + dx), p.at(t.b().x + dx), p.at(t.c().x + dx));
}

std::array<DATriangle, 2> sss_not_aa_witness(const Parabola& p, const Scalar& a, const Scalar& b, const Scalar& c,
                                             const Scalar& k) {
  return {DATriangle(p.at(a), p.at(b), p.at(c)), DATriangle(p.at(k * a), p.at(k * b), p.at(k * c))};
}

DiagSection diag_section_similarity(const Point& a, const Point& b, const Point& c, const Point& d) {
  const MeetResult m = meet(line_through(a, c), line_through(b, d));
  if (!m.is_finite()) throw GeometryError("diag_section_similarity: diagonals do not meet in a finite point");
  DiagSection out;
  out.x = m.point();
  out.xab_xdc = classify_pair(DATriangle(out.x, a, b), DATriangle(out.x, d, c)).sim_aa;
  out.xbc_xad = classify_pair(DATriangle(out.x, b, c), DATriangle(out.x, a, d)).sim_aa;
  return out;
}

FinalFeet final_theorem_feet(const DATriangle& t, const DATriangle& tp, bool enforce) {
  FinalFeet out;
  const Scalar s = t.a().x + tp.a().x;
  out.admissible = t.b().x + tp.b().x == s && t.c().x + tp.c().x == s &&
                   t.circumparabola().kappa().abs() == tp.circumparabola().kappa().abs();
  if (enforce && !out.admissible) throw GeometryError("final_theorem_feet: primed triangle is not a reversed copy");
  for (Vertex v : kVertices) out.feet[ix(v)] = foot_of_perpendicular(t[v], tp.side_opposite(v));
  out.collinearity = collinearity_det(out.feet[0], out.feet[1], out.feet[2]);
  try {
    out.menelaus = menelaus_product(tp, out.feet[0], out.feet[1], out.feet[2]);
  } catch (const GeometryError&) {
    // A foot landed on a vertex of the primed triangle.
  }
  return out;
}

IntroObservation intro_observation_check(const DATriangle& t, const std::array<Scalar, 3>& primed_x, bool enforce) {
  IntroObservation out;
  out.hypothesis = t.b().x - t.a().x == primed_x[0] - primed_x[1] && t.c().x - t.b().x == primed_x[1] - primed_x[2];
  if (enforce && !out.hypothesis) throw GeometryError("intro_observation_check: spacing hypothesis fails");
  for (Vertex v : kVertices) out.feet[ix(v)] = t.side_opposite(v).at(primed_x[ix(v)]);
  out.collinearity = collinearity_det(out.feet[0], out.feet[1], out.feet[2]);
  return out;
}

}  // namespace dag
