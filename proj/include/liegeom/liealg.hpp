#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liegeom/exterior.hpp"

namespace liegeom {

/// Raised when structure constants violate the Jacobi identity. Carries the
/// first violating basis triple (0-based, i < j < k).
class JacobiError : public MathError {
 public:
  JacobiError(const std::string& what, std::array<std::size_t, 3> triple)
      : MathError(what), triple_(triple) {}
  const std::array<std::size_t, 3>& triple() const { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

/// Lie algebra given by the differentials d e^k of a dual basis (Salamon
/// notation). Convention: dα(x, y) = -α([x, y]), so the structure constants
/// are c^k_{ij} = -de^k(e_i, e_j) and (0,0,e12) has [e1, e2] = -e3.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// `d[k]` is the 2-form d e^{k}. Throws JacobiError unless `check_jacobi`
  /// is false (used to build deliberately invalid instances).
  LieAlgebra(std::vector<KForm> d, std::vector<std::string> labels = {}, bool check_jacobi = true);
  static LieAlgebra abelian(std::size_t dim);
  /// From constants c(k, i, j) = c^k_{ij} stored as c[(k*n + i)*n + j].
  static LieAlgebra from_structure_constants(std::size_t dim, const std::vector<Scalar>& c,
                                             std::vector<std::string> labels = {}, bool check_jacobi = true);

  std::size_t dim() const { return n_; }
  const std::vector<KForm>& differentials() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Scalar& c(std::size_t k, std::size_t i, std::size_t j) const { return c_[(k * n_ + i) * n_ + j]; }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad x acting on column vectors.
  Matrix ad(const Vector& x) const;
  const Matrix& ad_basis(std::size_t i) const { return ad_[i]; }

  /// Chevalley-Eilenberg differential on forms of any degree.
  KForm d(const KForm& a) const;
  /// Matrix of d from k-forms to (k+1)-forms in the sorted bases.
  Matrix d_matrix(std::size_t k) const;
  /// Basis of closed k-forms.
  std::vector<KForm> closed_forms(std::size_t k) const;

  /// First basis triple violating Jacobi, if any.
  std::optional<std::array<std::size_t, 3>> jacobi_violation() const;
  bool satisfies_jacobi() const { return !jacobi_violation().has_value(); }
  /// d(d e^k) = 0 for every generator.
  bool d_squared_zero() const;

  bool is_derivation(const Matrix& f) const;
  /// Linear system in the n^2 entries of D (row-major, D(a,b) at a*n+b) whose
  /// kernel is Der(g).
  Matrix derivation_equations() const;
  std::vector<Matrix> derivation_space() const;

  /// Bracket of two subspaces, as a row-reduced basis.
  std::vector<Vector> bracket_span(const std::vector<Vector>& a, const std::vector<Vector>& b) const;
  std::vector<std::vector<Vector>> lower_central_series() const;
  std::vector<std::vector<Vector>> derived_series() const;
  std::vector<Vector> center() const;
  std::vector<Vector> basis() const;

  bool is_subalgebra(const std::vector<Vector>& span) const;
  bool is_ideal(const std::vector<Vector>& span) const;
  /// Lower central series of the subalgebra `span` reaches zero.
  bool is_nilpotent_subalgebra(const std::vector<Vector>& span) const;
  bool in_center(const Vector& v) const;
  /// Membership in the nilradical, valid for solvable algebras: x lies in the
  /// nilradical iff span{x} + [g, g] is nilpotent.
  bool in_nilradical(const Vector& v) const;

 private:
  void build_constants();
  std::size_t n_ = 0;
  std::vector<KForm> d_;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
  std::vector<Matrix> ad_;
};

struct StructuralReport {
  bool nilpotent = false;
  std::size_t step = 0;  // nilpotency step when nilpotent
  bool solvable = false;
  std::vector<Vector> center;
  bool unimodular = false;
  Matrix killing;
};

StructuralReport structural_report(const LieAlgebra& g);

std::vector<std::string> default_labels(std::size_t n);

}  // namespace liegeom
