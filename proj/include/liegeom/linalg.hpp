#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liegeom/matrix.hpp"
#include "liegeom/polynomial.hpp"

namespace liegeom {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Float matrices use partial pivoting.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column of the RREF
/// (free variable set to 1, the others to 0).
std::vector<Vector> nullspace(const Matrix& m);

struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel;
};
/// Solution set of m x = b, or nullopt when inconsistent.
std::optional<AffineSolution> affine_solve(const Matrix& m, const Vector& b);

/// Throws MathError when singular.
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Row-reduced basis of span(vs) (vectors of length n).
std::vector<Vector> span_basis(const std::vector<Vector>& vs, std::size_t n);
bool in_span(const std::vector<Vector>& vs, const Vector& v);
/// Coordinates c with sum c_i vs_i = v, or nullopt if v is not in the span.
std::optional<Vector> span_coordinates(const std::vector<Vector>& vs, const Vector& v);

struct Signature {
  std::size_t p = 0;  // positive
  std::size_t q = 0;  // negative
  std::size_t r = 0;  // nullity
  bool operator==(const Signature&) const = default;
};
/// Inertia of a symmetric matrix by congruence elimination. Throws on
/// non-symmetric input.
Signature signature(const Matrix& g);

/// Characteristic polynomial det(x - A) (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(const Matrix& a);
/// Minimal polynomial: lcm of the per-vector Krylov annihilators.
Polynomial minimal_polynomial(const Matrix& a);
/// True iff the minimal polynomial is squarefree. Rejects float input.
bool is_semisimple(const Matrix& a);

/// Eigenvalue a + b i with algebraic multiplicity. When the remaining factor
/// of the characteristic polynomial has no rational or quadratic
/// factorization, `residual` holds it instead.
struct Eigenvalue {
  Scalar re;
  Scalar im;
  std::size_t multiplicity = 1;
  std::string str() const;
};
struct Spectrum {
  std::vector<Eigenvalue> values;
  Polynomial residual;  // degree >= 3 factor without rational roots, or 1
  bool all_rational() const;
  std::string str() const;
};
/// Eigenvalues of a rational matrix: rational roots by the rational root
/// theorem, then an irreducible quadratic residual solved in closed form.
/// Matrices with irrational entries get only the residual.
Spectrum spectrum(const Matrix& a);

}  // namespace liegeom
