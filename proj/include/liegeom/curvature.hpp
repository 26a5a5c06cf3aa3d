#pragma once

#include <optional>
#include <vector>

#include "liegeom/liealg.hpp"

namespace liegeom {

/// Lie algebra with a nondegenerate left-invariant metric.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;
  /// Throws MathError if the metric is degenerate or of the wrong size.
  MetricLieAlgebra(LieAlgebra algebra, Matrix gram);

  std::size_t dim() const { return alg_.dim(); }
  const LieAlgebra& algebra() const { return alg_; }
  const Metric& metric() const { return g_; }
  const Matrix& gram() const { return g_.gram(); }
  Scalar g(const Vector& x, const Vector& y) const { return g_(x, y); }

  Matrix adjoint(const Matrix& f) const { return g_.adjoint(f); }
  Matrix symmetric_part(const Matrix& f) const { return g_.symmetric_part(f); }
  Matrix skew_part(const Matrix& f) const { return g_.skew_part(f); }

  /// Trace vector H: g(H, x) = Tr ad x.
  Vector trace_vector() const;

 private:
  LieAlgebra alg_;
  Metric g_;
};

/// ∇_x y = -(ad y)^s x - ½ (ad x)^* y.
Vector levi_civita(const MetricLieAlgebra& m, const Vector& x, const Vector& y);
/// Matrix of ∇_x acting on column vectors.
Matrix connection_matrix(const MetricLieAlgebra& m, const Vector& x);

struct RicciData {
  Matrix ric;       // bilinear form, ric(e_i, e_j)
  Matrix op;        // Ric with ric(v, w) = g(Ric v, w)
  std::optional<Scalar> einstein;  // λ when Ric = λ id
};

RicciData make_ricci_data(const Matrix& ric, const Metric& g);

/// Ricci tensor by the Lie-algebraic formula
/// 2 ric(v,w) = -(v⌟dw♭ + w⌟dv♭)(H) + g(dv♭, dw♭) - g(ad v, ad w) - Tr(ad v ad w).
RicciData ricci(const MetricLieAlgebra& m);
/// Independent oracle: ric(y, z) = Tr(x ↦ R(x, y) z) from the Levi-Civita
/// connection, R(x, y) = [∇_x, ∇_y] - ∇_[x,y].
Matrix ricci_from_connection(const MetricLieAlgebra& m);

std::optional<Scalar> is_einstein(const MetricLieAlgebra& m);
bool is_ricci_flat(const MetricLieAlgebra& m);

/// Ricci tensor of g ⋊_D ⟨e0⟩ with metric g + τ e0², by the block formulas
/// for a nilpotent base (e0 is the last basis vector).
RicciData ricci_of_standard_extension_blockwise(const MetricLieAlgebra& base, const Matrix& d, int tau);

struct CentralCocycle {
  int epsilon;   // ±1, the sign of g(e_s, e_s)
  KForm sigma;   // d e^s, closed on the base
};
/// Ricci tensor of the central extension of a nilpotent base by the given
/// cocycles (new vectors appended after the base), by the O'Neill-type block
/// formulas.
RicciData ricci_of_central_extension_blockwise(const MetricLieAlgebra& base, const std::vector<CentralCocycle>& specs);

}  // namespace liegeom
