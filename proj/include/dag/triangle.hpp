#pragma once

#include <array>
#include <map>
#include <string>

#include "dag/gauge.hpp"
#include "dag/parabola.hpp"
#include "dag/scalar.hpp"

namespace dag {

enum class Vertex { A = 0, B = 1, C = 2 };

inline constexpr std::array<Vertex, 3> kVertices{Vertex::A, Vertex::B, Vertex::C};

std::string to_string(Vertex v);

enum class BisectorMode { interior, positive };

/// Three points with pairwise distinct x that are not collinear. User labels
/// are kept; angle signs follow the x-order (the middle vertex is negative).
class DATriangle {
 public:
  /// Throws GeometryError for a singular side, a collinear triple, or a
  /// failed construction invariant.
  DATriangle(Point a, Point b, Point c);

  const Point& operator[](Vertex v) const { return pts_[idx(v)]; }
  const Point& a() const { return pts_[0]; }
  const Point& b() const { return pts_[1]; }
  const Point& c() const { return pts_[2]; }

  const Parabola& circumparabola() const { return parabola_; }

  /// Vertices sorted by x: left, middle, right.
  const std::array<Vertex, 3>& by_x() const { return order_; }
  Vertex negative_vertex() const { return order_[1]; }

  /// The two vertices other than v, in cyclic order (A -> B, C; B -> C, A; C -> A, B).
  std::array<Vertex, 2> others(Vertex v) const;

  /// Finite slope of side UV.
  const Scalar& side_slope(Vertex u, Vertex v) const;
  /// The side opposite v.
  Line side_opposite(Vertex v) const;

  /// Interior DA angles indexed by user label. The middle vertex gets
  /// -|Slp diff|, the outer two +|Slp diff|; equals |kappa| (c-b, a-c, b-a)
  /// on sorted x-coordinates a < b < c.
  const std::array<Scalar, 3>& interior_angles() const { return angles_; }
  const Scalar& angle(Vertex v) const { return angles_[idx(v)]; }

  /// DA norms of the sides opposite A, B, C: |BC|, |CA|, |AB|.
  std::array<Scalar, 3> side_norms() const;

  bool is_da_isosceles() const;

  friend bool operator==(const DATriangle& s, const DATriangle& t) { return s.pts_ == t.pts_; }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  std::array<Point, 3> pts_;
  std::array<Vertex, 3> order_;
  std::array<std::array<Scalar, 3>, 3> slopes_;
  std::array<Scalar, 3> angles_;
  Parabola parabola_;
};

struct SideNormEquation {
  std::array<Scalar, 3> norms;
  /// max - (sum of the other two); zero for every DA triangle.
  Scalar residual;
};

SideNormEquation side_norm_equation(const DATriangle& t);

/// Slope of the positive-mode bisector at v: the mean of the two side
/// slopes, i.e. the chord towards the circumparabola point above the mean x
/// of the other two vertices.
Scalar positive_bisector_slope(const DATriangle& t, Vertex v);

Line bisector_at(const DATriangle& t, Vertex v, BisectorMode mode);

/// |PD| |VQ| - |DQ| |VP| where P, Q are the other vertices and D is where
/// the interior bisector at v meets the opposite side.
Scalar bisector_ratio_check(const DATriangle& t, Vertex v);

struct CenterSet {
  Point incenter;
  /// Excenter opposite each vertex; the middle vertex's excenter is Ideal.
  std::map<Vertex, MeetResult> excenters;
  Point centroid;
  DATriangle tangent_triangle;
  DATriangle bisector_triangle;
  Point tangent_centroid;
  Point bisector_centroid;
};

Point centroid(const DATriangle& t);

/// Throws GeometryError if a construction invariant (triple concurrency,
/// excenter axis membership) fails.
CenterSet centers(const DATriangle& t);

/// Point of the sloped line l above x_P.
Point foot_of_perpendicular(const Point& p, const Line& l);

struct CircumOrtho {
  MeetResult circumcenter;
  MeetResult orthocenter;
  /// x-values of the perpendicular bisectors of BC, CA, AB.
  std::array<Scalar, 3> bisector_x;
};

CircumOrtho circum_ortho_at_infinity(const DATriangle& t);

struct NaiveSimson {
  /// Feet on BC, CA, AB.
  std::array<Point, 3> feet;
  Line line;
};

NaiveSimson naive_simson(const DATriangle& t, const Parabola& p, const Point& pt);

struct SimsonResult {
  std::array<Point, 3> k_points;
  std::array<Point, 3> feet;
  Line line;
  /// Intercept predicted in closed form:
  /// kappa (u(a+b+c) - u^2 - (ab+bc+ca)) + gamma with u = (m - beta)/kappa.
  Scalar predicted_intercept;
  Scalar collinearity;
};

/// K_V is the second meet of the slope-m line through V with the
/// circumparabola; H_V is the foot of K_V on the side opposite V.
SimsonResult simson(const DATriangle& t, const Scalar& m);

struct MidpointLemma {
  /// D = l_B n l_C, E = l_C n l_A, F = l_A n l_B (positive-mode bisectors).
  std::array<MeetResult, 3> meets;
  /// A', B', C': feet of each vertex on the opposite side.
  std::array<Point, 3> feet;
  /// Meet minus midpoint(V, V'), per vertex; zero vectors when the lemma holds.
  std::array<Point, 3> residuals;
  bool ideal = false;
};

MidpointLemma midpoint_lemma_check(const DATriangle& t);

struct DABCTResult {
  /// L_A = BC n l_A, L_B = CA n l_B, L_C = AB n l_C.
  std::array<Point, 3> l_points;
  /// For each V: the side, l_V and the feet-chord H_P H_Q all pass through L_V.
  std::array<bool, 3> concurrent;
  Scalar collinearity;
  Line line;
};

/// Throws GeometryError for DA-isosceles input or an ideal meet.
DABCTResult dabct(const DATriangle& t);

}  // namespace dag
