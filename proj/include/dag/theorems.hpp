#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dag/gauge.hpp"
#include "dag/parabola.hpp"
#include "dag/triangle.hpp"

namespace dag {

// ---- quadrilaterals on a parabola ----

/// (b-a)(d-c) + (d-a)(c-b) - (c-a)(d-b) with oriented DA lengths.
Scalar ptolemy_residual(const Parabola& p, const Point& a, const Point& b, const Point& c, const Point& d);

/// Requires x_E < x_A < x_B < x_D and DE parallel to AB. Returns
/// x(AD n EB) - (x_A + x_B)/2.
Scalar brahmagupta_check(const Parabola& p, const Point& e, const Point& a, const Point& b, const Point& d);

struct TrapezoidVerdict {
  /// Exactly one pair of opposite sides parallel, the other pair equal in DA norm.
  bool isosceles_trapezoid = false;
  /// All four on one vertical-axis parabola with a pair of parallel opposite sides.
  bool inscribed_with_parallel_pair = false;
};

/// Throws for a singular side or diagonal.
TrapezoidVerdict trapezoid_equivalence(const Point& a, const Point& b, const Point& c, const Point& d);

struct IntersectingParabolas {
  Point a, b;
  Point p, q, r, s;
  /// Slp(PR) - Slp(QS).
  Scalar residual;
};

/// gamma and delta must meet in two rational points A, B. P, Q are the
/// second meets of the slope-mA line through A with gamma and delta; R, S
/// likewise through B. Throws on tangency (P = R or Q = S) or an irrational meet.
IntersectingParabolas intersecting_parabolas_check(const Parabola& gamma, const Parabola& delta, const Scalar& m_a,
                                                   const Scalar& m_b);

struct ArcSymmetry {
  Point d;
  Point d_prime;
  Scalar opposite_sum;
  bool conparabolic = false;
};

/// On y = x^2 with a < b < p < c: D = BC n AP, D' = CA n BP' where
/// P' = (2c - p, (2c - p)^2). Tests A, B, D, D' for a common parabola.
ArcSymmetry arc_symmetry_check(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& p);

// ---- Ceva / Menelaus ----

/// (BD/DC)(CE/EA)(AF/FB) with directed x-differences. D, E, F must lie on
/// the side lines BC, CA, AB and differ from the vertices.
Scalar ceva_product(const DATriangle& t, const Point& d, const Point& e, const Point& f);
Scalar menelaus_product(const DATriangle& t, const Point& d, const Point& e, const Point& f);

/// Three lines through one finite point, or pairwise parallel.
bool concurrent(const Line& l1, const Line& l2, const Line& l3);

// ---- Miquel ----

struct MiquelResult {
  MeetResult m;
  /// Circumparabolas used, in the order listed by the theorem.
  std::vector<Parabola> parabolas;
  /// Remaining memberships (true when M is on them). Empty when M is ideal.
  std::vector<bool> memberships;
  /// Degree of the eliminant used to extract M.
  int eliminant_degree = 0;
  /// Triangle only: the same point reached through the other pairing.
  std::optional<MeetResult> cross_check;
};

/// D on BC, E on CA, F on AB, none at a vertex. Parabolas C_AEF, C_BFD,
/// C_CDE. Throws when a triple is collinear.
MiquelResult miquel_triangle(const DATriangle& t, const Point& d, const Point& e, const Point& f);

class CompleteQuadrilateral {
 public:
  /// Lines AB, BC, CD, DA. Throws if a line is singular or a required
  /// meet is not finite.
  CompleteQuadrilateral(Line ab, Line bc, Line cd, Line da);

  const std::array<Line, 4>& lines() const { return lines_; }
  /// A, B, C, D, E = AB n CD, F = BC n AD.
  const std::array<Point, 6>& points() const { return pts_; }

 private:
  std::array<Line, 4> lines_;
  std::array<Point, 6> pts_;
};

/// Parabolas C_ABF, C_BCE, C_CDF, C_DAE; M extracted from the first two
/// through B. Throws when a triple is collinear or shares an x-coordinate.
MiquelResult miquel_quadrilateral(const CompleteQuadrilateral& q);

// ---- singular projective length, m:n division, isogonals ----

/// (p+q) x0 - p q: height where the chord between (p,p^2) and (q,q^2) meets x = x0.
Scalar singular_projective_length(const Scalar& p, const Scalar& x0, const Scalar& q);

struct MnDivision {
  Scalar c;
  Point a_c, a_b, b_c, b_a;
  /// n AA_C - m A_CA_B and m BB_C - n B_CB_A in directed vertical measure.
  std::array<Scalar, 2> residuals;
};

MnDivision mn_division_check(const Scalar& a, const Scalar& b, const Scalar& p, long m, long n);

/// Cevian at v with slope m_from + alpha (m_to - m_from), where the side
/// slopes are taken towards `from` and the remaining vertex.
Slope cevian_from_fraction(const DATriangle& t, Vertex v, const Scalar& alpha, Vertex from);

/// Reflection of a cevian slope across the mean-slope bisector at v:
/// s -> m1 + m2 - s. The singular cevian is fixed.
Slope isogonal_slope(const DATriangle& t, Vertex v, const Slope& s);

struct IsogonalVerdict {
  bool original_concurrent = false;
  bool isogonal_concurrent = false;
  /// Ceva products of the cevian feet; empty when a cevian is parallel to
  /// its opposite side.
  std::optional<Scalar> original_ceva;
  std::optional<Scalar> isogonal_ceva;
  bool involution = false;
};

IsogonalVerdict isogonal_concurrency_check(const DATriangle& t, const std::array<Slope, 3>& cevians);

// ---- Euclidean export (binary64) ----

struct EuclidPoint {
  double x = 0;
  double y = 0;
};

struct EuclidReport {
  /// |det| of the unit-normalized homogeneous J_A, J_B, J_C.
  double collinearity = 0;
  /// Same measure for the line triples (AB, l_C, H_AH_B) etc.
  std::array<double, 3> concurrency{};
  /// Deviation of the J points from the barycentrics (0:b:c), (a:0:-c), (a:b:0).
  double trilinear = 0;
  bool j_b_at_infinity = false;

  double worst() const;
};

/// Throws GeometryError when the area is below `min_area`.
EuclidReport euclid_bisector_collinearity(const EuclidPoint& a, const EuclidPoint& b, const EuclidPoint& c,
                                          double min_area = 1e-6);

/// x - y + z for the three trilinear triples, in exact arithmetic.
std::array<Scalar, 3> euclid_trilinear_identity();

}  // namespace dag
