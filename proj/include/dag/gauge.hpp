#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dag/scalar.hpp"

namespace dag {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

Point midpoint(const Point& a, const Point& b);

struct Vector2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Vector2&, const Vector2&) = default;
};

/// Projective reference structure: a reference line through `origin` with
/// direction `reference_direction`, and the projective direction d.
struct Gauge {
  Point origin{0, 0};
  Vector2 reference_direction{1, 0};
  Vector2 projective_direction{0, 1};

  static Gauge identity() { return {}; }

  /// Throws GeometryError when the two directions are linearly dependent.
  void validate() const;

  /// Coordinates of `p` in the normalized chart (origin -> (0,0),
  /// reference direction -> (1,0), projective direction -> (0,1)).
  Point to_chart(const Point& p) const;
  Point from_chart(const Point& p) const;

  friend bool operator==(const Gauge&, const Gauge&) = default;
};

std::vector<Point> normalize_chart(const Gauge& g, std::span<const Point> pts);

/// Slope of a direction in the normalized chart; the singular slope is the
/// direction of d itself.
class Slope {
 public:
  static Slope finite(Scalar value) { return Slope(std::move(value), false); }
  static Slope singular() { return Slope(Scalar(0), true); }

  bool is_singular() const { return singular_; }
  bool is_finite() const { return !singular_; }
  /// Throws GeometryError for the singular slope.
  const Scalar& value() const;
  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Slope(Scalar v, bool singular) : value_(std::move(v)), singular_(singular) {}
  Scalar value_;
  bool singular_;
};

/// How an angle behaves when one ray approaches the singular direction.
/// Only `absorptive` is implemented; the other two are named for reference.
enum class BoundaryPolicy { absorptive, lift, divergent };

inline constexpr BoundaryPolicy kBoundaryPolicy = BoundaryPolicy::absorptive;

/// Oriented difference angle.
struct DAAngle {
  Scalar value;

  friend bool operator==(const DAAngle&, const DAAngle&) = default;
  friend auto operator<=>(const DAAngle& a, const DAAngle& b) { return a.value <=> b.value; }
  friend DAAngle operator+(const DAAngle& a, const DAAngle& b) { return {a.value + b.value}; }
  friend DAAngle operator-(const DAAngle& a, const DAAngle& b) { return {a.value - b.value}; }
  friend DAAngle operator-(const DAAngle& a) { return {-a.value}; }
};

/// Either y = m*x + k or the singular line x = x0.
class Line {
 public:
  /// The reference line y = 0.
  Line() : Line(Scalar(0), Scalar(0), false) {}
  static Line sloped(Scalar m, Scalar k) { return Line(std::move(m), std::move(k), false); }
  static Line singular(Scalar x0) { return Line(Scalar(0), std::move(x0), true); }
  /// The line through `p` with the given slope.
  static Line through(const Point& p, const Slope& s);

  bool is_singular() const { return singular_; }
  Slope slope() const { return singular_ ? Slope::singular() : Slope::finite(m_); }
  /// Valid for sloped lines only.
  const Scalar& m() const;
  const Scalar& k() const;
  /// Valid for singular lines only.
  const Scalar& x0() const;

  bool contains(const Point& p) const;
  /// Point of a sloped line above x; throws for singular lines.
  Point at(const Scalar& x) const;
  std::string str() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line(Scalar a, Scalar b, bool singular) : m_(std::move(a)), k_(std::move(b)), singular_(singular) {}
  Scalar m_;
  Scalar k_;  // intercept, or x0 for singular lines
  bool singular_;
};

std::ostream& operator<<(std::ostream& os, const Line& l);

/// Uniform answer for incidence queries.
class MeetResult {
 public:
  struct At {
    Point point;
    friend bool operator==(const At&, const At&) = default;
  };
  struct Ideal {
    Slope direction;
    friend bool operator==(const Ideal&, const Ideal&) = default;
  };
  struct Coincident {
    friend bool operator==(const Coincident&, const Coincident&) = default;
  };
  struct Empty {
    friend bool operator==(const Empty&, const Empty&) = default;
  };

  MeetResult() : v_(Empty{}) {}

  static MeetResult at(Point p) { return MeetResult(At{std::move(p)}); }
  static MeetResult ideal(Slope s) { return MeetResult(Ideal{std::move(s)}); }
  static MeetResult coincident() { return MeetResult(Coincident{}); }
  static MeetResult empty() { return MeetResult(Empty{}); }

  bool is_finite() const { return std::holds_alternative<At>(v_); }
  bool is_ideal() const { return std::holds_alternative<Ideal>(v_); }
  bool is_coincident() const { return std::holds_alternative<Coincident>(v_); }
  bool is_empty() const { return std::holds_alternative<Empty>(v_); }

  /// Throws GeometryError unless finite.
  const Point& point() const;
  /// Throws GeometryError unless ideal.
  const Slope& direction() const;
  std::string str() const;

  friend bool operator==(const MeetResult&, const MeetResult&) = default;

 private:
  using Variant = std::variant<At, Ideal, Coincident, Empty>;
  explicit MeetResult(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

std::ostream& operator<<(std::ostream& os, const MeetResult& m);

/// Throws GeometryError when a == b.
Slope slope_between(const Point& a, const Point& b);

/// Slp(PB) - Slp(PA); zero whenever either ray is singular. Throws when P
/// coincides with A or B.
DAAngle difference_angle(const Point& a, const Point& p, const Point& b);

/// |x_B - x_A| in the normalized chart.
Scalar da_norm(const Point& a, const Point& b);
/// x_B - x_A; the oriented DA length used by directed ratios.
Scalar directed_norm(const Point& a, const Point& b);

Line line_through(const Point& a, const Point& b);
MeetResult meet(const Line& l1, const Line& l2);

/// det3 of the homogeneous rows (x, y, 1).
Scalar collinearity_det(const Point& a, const Point& b, const Point& c);
bool collinear(const Point& a, const Point& b, const Point& c);

}  // namespace dag
