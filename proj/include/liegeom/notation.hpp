#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liegeom/liealg.hpp"

namespace liegeom {

/// Malformed text input. `column` is the 1-based character position of the
/// problem within the parsed string (0 when not applicable); `slot` is the
/// 1-based tuple slot for algebra input (0 otherwise).
class ParseError : public MathError {
 public:
  ParseError(const std::string& what, std::size_t column = 0, std::size_t slot = 0)
      : MathError(what), column_(column), slot_(slot) {}
  std::size_t column() const { return column_; }
  std::size_t slot() const { return slot_; }

 private:
  std::size_t column_;
  std::size_t slot_;
};

/// One term of a linear combination: coefficient times e_{I} (or e^{I}),
/// indices 0-based and in the order written.
struct Term {
  Scalar coeff;
  MultiIndex index;
};

/// Parses "c1*e12 - 1/2r6*e34 + e[10,2]" into terms. Coefficients are
/// integers, fractions a/b, a/b"r"d meaning (a/b)*sqrt(d), or a parenthesised
/// scalar literal "(1/2+1/4*sqrt(6))". With `bare_digits` every digit after
/// "e" is one index; otherwise only bracketed indices are accepted, except that
/// a term of `arity` 1 may be written "e10". "0" denotes the empty sum.
std::vector<Term> parse_terms(std::string_view text, std::size_t dim, std::size_t arity, bool bare_digits);

/// Salamon notation "(0,0,e12,0)" -> Lie algebra (Jacobi checked). Bare-digit
/// indices are legal only for dimension <= 9; above that use "e[10,2]".
LieAlgebra parse_algebra(std::string_view text, std::vector<std::string> labels = {});
/// Canonical form: terms sorted by multi-index, coefficient 1 omitted, signs
/// attached to the coefficient, no spaces.
std::string print_algebra(const LieAlgebra& g);

/// "e1.e2 + 1/2*e3*e3": "ei.ej" is the symmetric product e^i⊗e^j + e^j⊗e^i and
/// "ei*ej" the plain tensor product. The result must be symmetric.
Matrix parse_metric(std::string_view text, std::size_t dim);
std::string print_metric(const Matrix& g);

/// k-form text "e13+e24-2*e56" (k inferred from the first term; "0" needs
/// `degree`).
KForm parse_form(std::string_view text, std::size_t dim, std::size_t degree);
std::string print_form(const KForm& f);

/// Vector text "e1 - 2*e3".
Vector parse_vector(std::string_view text, std::size_t dim);
std::string print_vector(const Vector& v);

/// Endomorphism text "e1 -> e2; e2 -> -e1" listing images of basis vectors
/// (unlisted vectors map to 0).
Matrix parse_endomorphism(std::string_view text, std::size_t dim);
std::string print_endomorphism(const Matrix& f);

}  // namespace liegeom
