// One PASS/FAIL line per acceptance criterion. Campaigns use 1000 trials,
// seed 42, bound 50.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dag/equivalence.hpp"
#include "dag/harness.hpp"
#include "dag/theorems.hpp"

using namespace dag;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

TheoremReport campaign(const std::string& id, Criterion& c, std::ostringstream& detail) {
  CampaignConfig cfg;
  cfg.theorem = id;
  cfg.trials = 1000;
  cfg.seed = 42;
  cfg.bound = 50;
  const auto t0 = std::chrono::steady_clock::now();
  TheoremReport r;
  try {
    r = run_campaign(cfg);
  } catch (const std::exception& e) {
    c.expect(false, id + " threw: " + e.what());
    return r;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail << ' ' << id << "(fail=" << r.failures << " skip=" << r.skipped << " ideal=" << r.ideal << ' ' << secs
         << "s)";
  c.expect(r.trials == 1000, id + " ran " + std::to_string(r.trials) + " trials");
  c.expect(r.failures == 0, id + ": " + r.failure_note.value_or("failure"));
  c.expect(secs < 30, id + " exceeded 30 s");
  return r;
}

void exact(Criterion& c, std::ostringstream& d, const std::string& id) {
  const TheoremReport r = campaign(id, c, d);
  c.expect(r.skipped == 0, id + " skipped trials");
}

Point sq(const Scalar& x) { return {x, x * x}; }

int report(int n, const std::string& title, Criterion& c, const std::ostringstream& detail) {
  std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " |" << detail.str();
  for (const std::string& s : c.notes) std::cout << " [" << s << "]";
  std::cout << '\n';
  return c.ok ? 0 : 1;
}

}  // namespace

int main() {
  int failed = 0;

  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "angle_axioms");
    failed += report(1, "angle-axiom suite", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "parabolic_power");
    failed += report(2, "parabolic power, three secants per trial", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "iso_angle_locus");
    failed += report(3, "iso-angle locus, 5 on and 5 off per trial", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "triangle_invariants");
    failed += report(4, "triangle invariants", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "bisector_centers");
    const DATriangle t(sq(0), sq(1), sq(2));
    const CenterSet cs = centers(t);
    c.expect(cs.incenter == Point{1, Scalar(3, 2)}, "incenter (1, 3/2)");
    c.expect(cs.excenters.at(Vertex::A) == MeetResult::at({2, 3}), "I_A (2, 3)");
    c.expect(cs.excenters.at(Vertex::C) == MeetResult::at({0, -1}), "I_C (0, -1)");
    c.expect(cs.bisector_centroid == Point{1, Scalar(7, 6)}, "G_I (1, 7/6)");
    failed += report(5, "bisector theorem and centers, fixed instance (0,1,2)", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    for (const char* id : {"ptolemy", "brahmagupta", "trapezoid", "intersecting_parabolas", "inscribed_angle",
                           "arc_symmetry", "parabolic_cyclic", "tangent_lengths"})
      exact(c, d, id);
    failed += report(6, "quadrilateral suite on a parabola", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    for (const char* id : {"miquel_triangle", "miquel_quadrilateral"}) {
      const TheoremReport r = campaign(id, c, d);
      c.expect(r.ideal > 0, std::string(id) + ": no ideal trial");
      c.expect(r.trials - r.ideal - r.skipped > 0, std::string(id) + ": no finite trial");
    }
    failed += report(7, "Miquel triangle and quadrilateral", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "ceva");
    exact(c, d, "menelaus");
    failed += report(8, "Ceva and Menelaus, both directions", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "simson");
    // kappa = 1, (a, b, c) = (0, 1, 3), m = 2: intercept 2*4 - 4 - 3 = 1.
    const SimsonResult s = simson(DATriangle(sq(0), sq(1), sq(3)), 2);
    c.expect(s.line == Line::sloped(2, 1), "fixed Simson line y = 2x + 1");
    failed += report(9, "Simson line slope and intercept", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "midpoint_lemma");
    exact(c, d, "dabct");
    const DABCTResult r = dabct(DATriangle(sq(0), sq(1), sq(3)));
    c.expect(r.l_points[0] == Point{Scalar(3, 2), 3}, "L_A (3/2, 3)");
    c.expect(r.l_points[1] == Point{-3, -9}, "L_B (-3, -9)");
    c.expect(r.l_points[2] == Point{Scalar(3, 5), Scalar(3, 5)}, "L_C (3/5, 3/5)");
    c.expect(!r.line.is_singular() && r.line.m() == Scalar(8, 3), "common slope 8/3");
    failed += report(10, "midpoint lemma and DABCT, fixed instance (0,1,3)", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    exact(c, d, "mn_division");
    const TheoremReport iso = campaign("isogonal", c, d);
    c.expect(iso.trials - iso.skipped >= 500, "fewer than 500 concurrent configurations");
    exact(c, d, "singular_projective_length");
    failed += report(11, "isogonal suite", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    for (const char* id : {"equivalence_chain", "shift_group", "diag_section", "final_theorem", "intro_observation"})
      exact(c, d, id);
    const auto w = sss_not_aa_witness(Parabola::standard(), 0, 1, 2, 2);
    const auto v = classify_pair(w[0], w[1]);
    c.expect(v.sim_sss && !v.sim_aa, "witness (0,1,2) vs (0,2,4)");
    const Parabola delta(1, -10, 25);
    const FinalFeet f = final_theorem_feet(DATriangle(sq(0), sq(1), sq(2)),
                                           DATriangle(delta.at(7), delta.at(6), delta.at(5)));
    c.expect(f.feet == std::array<Point, 3>{Point{0, -5}, Point{1, -8}, Point{2, -11}}, "capstone feet");
    c.expect(f.collinearity == 0, "capstone det3");
    const IntroObservation o = intro_observation_check(DATriangle(sq(0), sq(1), sq(2)), {7, 6, 5});
    c.expect(o.feet == std::array<Point, 3>{Point{7, 19}, Point{6, 12}, Point{5, 5}}, "observation feet");
    c.expect(o.collinearity == 0, "observation det3");
    failed += report(12, "equivalence hierarchy, shift group, capstone", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    const TheoremReport r = campaign("euclid_export", c, d);
    d << " max_residual=" << r.max_residual;
    c.expect(r.max_residual < 1e-9, "residual above 1e-9");
    c.expect(euclid_trilinear_identity() == std::array<Scalar, 3>{0, 0, 0}, "x - y + z identity");
    failed += report(13, "Euclidean export", c, d);
  }
  {
    Criterion c;
    std::ostringstream d;
    for (const char* id : {"ptolemy", "miquel_quadrilateral", "euclid_export"}) {
      CampaignConfig cfg;
      cfg.theorem = id;
      const std::string a = to_json(run_campaign(cfg)).dump(2);
      const std::string b = to_json(run_campaign(cfg)).dump(2);
      c.expect(a == b, std::string(id) + " reports differ");
      d << ' ' << id << "(" << a.size() << " bytes identical)";
    }
    CampaignConfig m;
    m.theorem = "ptolemy_broken";
    m.trials = 10;
    const TheoremReport r = run_campaign(m);
    c.expect(!r.passed(), "mutant survived 10 trials");
    c.expect(r.failure_note && r.failure_note->rfind("trial 0:", 0) == 0, "mutant not caught at trial 0");
    d << " mutant=" << r.failure_note.value_or("none");
    failed += report(14, "harness determinism and mutation control", c, d);
  }
  return failed == 0 ? 0 : 1;
}
