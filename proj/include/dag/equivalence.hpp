#pragma once

#include <array>
#include <optional>

#include "dag/parabola.hpp"
#include "dag/triangle.hpp"

namespace dag {

/// T1 vertex v corresponds to T2 vertex corr[v]. Must be a permutation.
using Correspondence = std::array<Vertex, 3>;

inline constexpr Correspondence kIdentity{Vertex::A, Vertex::B, Vertex::C};

Correspondence inverse(const Correspondence& c);

struct EquivalenceVerdict {
  bool sim_sss = false;
  bool sim_aa = false;
  bool sim_sas_signed = false;
  bool norm_congruent = false;
  bool da_congruent = false;
  /// Common ratio |T2 side| / |T1 side| when SSS holds.
  std::optional<Scalar> ratio;
  /// T2 angle minus T1 angle at corresponding vertices.
  std::array<Scalar, 3> angle_gaps;

  /// da => norm, sas <=> aa, aa => sss.
  bool chain_holds() const;
};

EquivalenceVerdict classify_pair(const DATriangle& t1, const DATriangle& t2, const Correspondence& corr = kIdentity);

struct CoefficientBridge {
  bool da_congruent = false;
  bool kappa_abs_equal = false;
  bool holds() const { return da_congruent == kappa_abs_equal; }
};

/// Throws GeometryError unless the pair is norm-congruent.
CoefficientBridge coefficient_bridge(const DATriangle& t1, const DATriangle& t2, const Correspondence& corr = kIdentity);

/// Moves every vertex along the circumparabola: x -> x + theta/kappa.
DATriangle shift(const DATriangle& t, const Scalar& theta);

/// Same x-spacing scaled by k on the same parabola: SSS-similar (ratio k)
/// but not AA-similar for k != 1.
std::array<DATriangle, 2> sss_not_aa_witness(const Parabola& p, const Scalar& a, const Scalar& b, const Scalar& c,
                                             const Scalar& k);

struct DiagSection {
  Point x;
  /// XAB ~ XDC with A<->D, B<->C.
  bool xab_xdc = false;
  /// XBC ~ XAD with B<->A, C<->D.
  bool xbc_xad = false;
};

/// X = AC n BD. Throws for a singular or parallel diagonal or a degenerate
/// sub-triangle.
DiagSection diag_section_similarity(const Point& a, const Point& b, const Point& c, const Point& d);

struct FinalFeet {
  /// Feet of A on B'C', B on C'A', C on A'B'.
  std::array<Point, 3> feet;
  Scalar collinearity;
  /// Menelaus product of the feet on triangle A'B'C'.
  std::optional<Scalar> menelaus;
  bool admissible = false;
};

/// T on gamma, T' on delta, with x_A + x_A' = x_B + x_B' = x_C + x_C' (the
/// primed triangle is a reversed congruent copy) and |kappa| equal. With
/// `enforce` the precondition failure throws; otherwise it is reported
/// through `admissible` and the residual is still computed.
FinalFeet final_theorem_feet(const DATriangle& t, const DATriangle& tp, bool enforce = true);

/// Feet at the primed x-coordinates: H_A on BC at x_A', H_B on CA at x_B',
/// H_C on AB at x_C'. Hypothesis: x_B - x_A = x_A' - x_B' and
/// x_C - x_B = x_B' - x_C'.
struct IntroObservation {
  std::array<Point, 3> feet;
  Scalar collinearity;
  bool hypothesis = false;
};

IntroObservation intro_observation_check(const DATriangle& t, const std::array<Scalar, 3>& primed_x,
                                         bool enforce = true);

}  // namespace dag
