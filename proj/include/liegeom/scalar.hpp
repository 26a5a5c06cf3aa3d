#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liegeom {

/// Raised when an operation has no meaningful result for its inputs
/// (division by zero, incompatible number fields, singular systems...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of the exact number tower used throughout the library.
///
/// A Scalar is either
///  - an exact number a + b*sqrt(d) with a, b rational and d a squarefree
///    integer > 1 (d == 0 means a plain rational, b == 0), or
///  - a double carried in float mode, used only to cross-check exact results.
///
/// Each exact value remembers the radicand of the field it was created in.
/// Arithmetic between two different quadratic fields throws MathError;
/// rationals mix freely with any field. Float mode is contagious.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}  // NOLINT: implicit by design of numeric literals
  Scalar(long v) : a_(v) {}  // NOLINT
  Scalar(const mpq_class& q) : a_(q) { a_.canonicalize(); }  // NOLINT

  static Scalar rational(long num, long den);
  /// a + b*sqrt(d); d must be squarefree and > 1.
  static Scalar quadratic(const mpq_class& a, const mpq_class& b, long d);
  /// Exact square root of a nonnegative rational, landing in Q or Q(sqrt(m)).
  static Scalar sqrt_of(const mpq_class& q);
  static Scalar from_double(double v);

  bool is_float() const { return float_; }
  bool is_exact() const { return !float_; }
  /// Exact and with no irrational part.
  bool is_rational() const { return !float_ && sgn(b_) == 0; }
  /// Radicand of the field tag (0 for plain rationals and floats).
  long radicand() const { return d_; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  /// The value as a rational; throws if it is not one.
  mpq_class to_rational() const;
  double to_double() const;

  bool is_zero() const;
  bool is_one() const { return *this == Scalar(1); }
  /// -1, 0 or +1. Exact for quadratic values.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  /// Value equality. Exact values compare exactly; a float compares within
  /// the float tolerance.
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }

  /// "3/4", "1/2+1/4*sqrt(6)", "0.125f".
  std::string str() const;
  /// Inverse of str(). Throws MathError on malformed text.
  static Scalar parse(std::string_view text);

  /// Absolute tolerance used by is_zero() in float mode. Default 1e-9.
  static double float_tolerance();
  static void set_float_tolerance(double tol);

 private:
  void require_compatible(const Scalar& o) const;
  void merge_tag(const Scalar& o);

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
  bool float_ = false;
  double f_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Squarefree decomposition n = s^2 * m of a positive integer.
void squarefree_split(const mpz_class& n, mpz_class& s, mpz_class& m);

}  // namespace liegeom
