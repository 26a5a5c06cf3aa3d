#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liegeom/linalg.hpp"

namespace liegeom {

/// Strictly increasing list of 0-based indices.
using MultiIndex = std::vector<std::size_t>;

/// All strictly increasing k-subsets of {0..dim-1}, in lexicographic order.
const std::vector<MultiIndex>& multi_indices(std::size_t dim, std::size_t k);
/// Position of a sorted multi-index in multi_indices(dim, I.size()).
std::size_t multi_index_position(const MultiIndex& sorted, std::size_t dim);
/// Sorts `idx` in place; returns the sign of the sorting permutation, or 0
/// when an index repeats.
int sort_with_sign(MultiIndex& idx);

/// Exterior k-form on a vector space of dimension `dim`, stored densely on the
/// sorted basis e^{i1...ik}. Evaluation uses the determinant convention
/// e^{12}(e_1, e_2) = 1.
class KForm {
 public:
  KForm() = default;
  KForm(std::size_t dim, std::size_t degree);
  /// The basis form e^{I}; I may be unsorted (the sign is applied).
  static KForm basis(std::size_t dim, MultiIndex idx);
  static KForm one_form(const Vector& coeffs);
  /// 2-form with σ(e_i, e_j) = a(i, j); a must be antisymmetric.
  static KForm from_matrix(const Matrix& a);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  /// Coefficient of e^{I}; I may be unsorted (the sign is applied).
  Scalar get(MultiIndex idx) const;
  /// Adds c * e^{I}; I may be unsorted.
  void add(MultiIndex idx, const Scalar& c);
  Scalar& at_position(std::size_t pos) { return c_[pos]; }

  bool is_zero() const;
  /// Value on the given vectors (one per degree).
  Scalar evaluate(const std::vector<Vector>& vs) const;
  /// Matrix of a 2-form: a(i, j) = σ(e_i, e_j).
  Matrix matrix() const;
  /// Coefficients of a 1-form.
  Vector as_vector() const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const Scalar& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) { return a *= Scalar(-1); }
  friend KForm operator*(const Scalar& s, KForm a) { return a *= s; }
  friend bool operator==(const KForm& a, const KForm& b);
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  /// Debug rendering "2*e^{1,2} - e^{3,4}" with 1-based indices.
  std::string str() const;

 private:
  void require_same_shape(const KForm& o) const;
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::vector<Scalar> c_;
};

KForm wedge(const KForm& a, const KForm& b);
/// Interior product v ⌟ a.
KForm contract(const Vector& v, const KForm& a);
/// The same form on a larger space, index i becoming index_map[i].
KForm embed_form(const KForm& f, std::size_t new_dim, const std::vector<std::size_t>& index_map);
/// The same form on the first f.dim() coordinates of a larger space.
KForm embed_form(const KForm& f, std::size_t new_dim);

/// A nondegenerate symmetric bilinear form with cached inverse. Provides the
/// musical isomorphisms and the induced inner products on forms and
/// endomorphisms. Endomorphisms are matrices acting on column vectors.
class Metric {
 public:
  Metric() = default;
  /// Throws MathError if `gram` is not symmetric or is degenerate.
  explicit Metric(Matrix gram);

  std::size_t dim() const { return g_.rows(); }
  const Matrix& gram() const { return g_; }
  const Matrix& inverse_gram() const { return ginv_; }
  Signature signature() const { return liegeom::signature(g_); }

  Scalar operator()(const Vector& x, const Vector& y) const;
  KForm flat(const Vector& v) const;
  Vector sharp(const KForm& alpha) const;

  /// f* with g(f x, y) = g(x, f* y).
  Matrix adjoint(const Matrix& f) const;
  Matrix symmetric_part(const Matrix& f) const;
  Matrix skew_part(const Matrix& f) const;
  bool is_self_adjoint(const Matrix& f) const { return adjoint(f) == f; }
  bool is_skew_adjoint(const Matrix& f) const { return adjoint(f) == -f; }
  /// g(f, h) = Tr(f h*).
  Scalar endo_inner(const Matrix& f, const Matrix& h) const;

  /// Induced inner product on k-forms: Σ a_I b_J det(g^{-1}[I, J]).
  Scalar form_inner(const KForm& a, const KForm& b) const;
  /// S with σ(x, y) = g(x, S y).
  Matrix two_form_to_endo(const KForm& sigma) const;
  /// Inverse of two_form_to_endo: σ(x, y) = g(x, S y).
  KForm endo_to_two_form(const Matrix& s) const;
  /// Operator raising a bilinear form: B(x, y) = g(R x, y) gives R = g^{-1} B
  /// for symmetric B.
  Matrix raise(const Matrix& bilinear) const;

 private:
  Matrix g_;
  Matrix ginv_;
};

}  // namespace liegeom
