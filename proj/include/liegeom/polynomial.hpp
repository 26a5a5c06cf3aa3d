#pragma once

#include <string>
#include <vector>

#include "liegeom/matrix.hpp"

namespace liegeom {

/// Univariate polynomial over Scalar, coefficients stored lowest degree first
/// with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  /// The monomial x.
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const;
  Scalar leading() const;
  Polynomial monic() const;
  Polynomial derivative() const;

  Scalar evaluate(const Scalar& t) const;
  Matrix evaluate(const Matrix& a) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  void divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// Monic lcm.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

}  // namespace liegeom
