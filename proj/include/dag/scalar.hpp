#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dag {

/// Raised when scalar text or a scene file cannot be read.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction's preconditions fail (coincident points,
/// singular sides, collinear triples, points off a curve, ...).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always kept in canonical form (reduced, positive
/// denominator), so structural equality is numeric equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  /// Accepts "n", "p/q" and finite decimals ("-0.25"). Decimals are read
  /// digit-by-digit, never through binary floating point.
  static Scalar parse(std::string_view text);

  /// "n" for integers, "p/q" otherwise.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Scalar abs() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

/// Exact square root when the argument is the square of a rational.
std::optional<Scalar> rational_sqrt(const Scalar& s);

using Row3 = std::array<Scalar, 3>;

/// Exact 3x3 determinant by cofactor expansion along the first row.
Scalar det3(const Row3& r1, const Row3& r2, const Row3& r3);

/// c2*x^2 + c1*x + c0
struct QuadraticPoly {
  Scalar c2;
  Scalar c1;
  Scalar c0;

  Scalar operator()(const Scalar& x) const { return (c2 * x + c1) * x + c0; }
  int degree() const;
  Scalar discriminant() const { return c1 * c1 - Scalar(4) * c2 * c0; }

  friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;
};

/// Vieta companion of a known root: -c1/c2 - known. Throws GeometryError if
/// the polynomial is not quadratic or `known` is not a root.
Scalar other_root(const QuadraticPoly& q, const Scalar& known);

}  // namespace dag
