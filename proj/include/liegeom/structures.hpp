#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegeom/curvature.hpp"
#include "liegeom/verdict.hpp"

namespace liegeom {

/// Input that contradicts the hypotheses of a structural construction.
class StructureError : public MathError {
 public:
  using MathError::MathError;
};

/// N_A(X,Y) = A²[X,Y] + [AX,AY] − A[AX,Y] − A[X,AY] (no ½ factor).
Vector nijenhuis(const LieAlgebra& g, const Matrix& a, const Vector& x, const Vector& y);
/// First basis pair (i < j) with N_A(e_i, e_j) ≠ 0.
std::optional<std::pair<std::size_t, std::size_t>> nijenhuis_violation(const LieAlgebra& g, const Matrix& a);

/// (φ, ξ, η) on a metric Lie algebra of odd dimension; Φ(X,Y) = g(X, φY).
struct AlmostContactMetric {
  MetricLieAlgebra mla;
  Matrix phi;
  Vector xi;
  KForm eta;

  /// η = ξ♭.
  static AlmostContactMetric from_reeb(MetricLieAlgebra mla, Matrix phi, Vector xi);
  /// Matrix of Φ: Φ(e_i, e_j) = (Gφ)(i, j).
  Matrix fundamental_matrix() const;
  /// Φ as a 2-form; throws StructureError when Gφ is not antisymmetric.
  KForm fundamental_form() const;
};

/// The almost contact metric identities, one check each.
Verdict check_almost_contact_metric(const AlmostContactMetric& s);
/// Almost contact metric identities plus N_φ + dη⊗ξ = 0 and dη = 2Φ, each
/// reporting the first failing basis pair.
Verdict check_sasaki(const AlmostContactMetric& s);

/// (g, J, ω) with ω(X,Y) = g(X, JY).
struct PseudoKahler {
  MetricLieAlgebra mla;
  Matrix J;
  KForm omega;

  /// J = ω♯ (ω(X,Y) = g(X,JY)).
  static PseudoKahler from_omega(MetricLieAlgebra mla, KForm omega);
  /// ω(X,Y) = g(X, JY); throws StructureError when GJ is not antisymmetric.
  static PseudoKahler from_J(MetricLieAlgebra mla, Matrix J);
};

/// J² = −id, g(J·,J·) = g, ω = g(·,J·), N_J = 0, dω = 0.
Verdict check_pseudo_kahler(const PseudoKahler& s);

/// The Lie algebra induced on span(basis) by projecting brackets along
/// span(kernel), which must be an ideal complementary to span(basis).
LieAlgebra induced_algebra(const LieAlgebra& g, const std::vector<Vector>& basis, const std::vector<Vector>& kernel);
/// Gram matrix of the restriction of g to span(basis).
Matrix restricted_gram(const Matrix& gram, const std::vector<Vector>& basis);
/// Matrix, in the coordinates of `basis`, of the map x ↦ f(x) projected along
/// span(kernel).
Matrix induced_endomorphism(const Matrix& f, const std::vector<Vector>& basis, const std::vector<Vector>& kernel);
/// Basis of the g-orthogonal complement of span(vs).
std::vector<Vector> orthogonal_complement(const Matrix& gram, const std::vector<Vector>& vs);

struct KahlerQuotient {
  PseudoKahler reduction;       // on ξ^⊥, in the coordinates of `basis`
  std::vector<Vector> basis;    // basis of ξ^⊥ in the ambient coordinates
  Verdict verdict;              // center = span{ξ}, pseudo-Kähler, řic = ric + 2ǧ
};

/// Pseudo-Kähler quotient g/span{ξ} realized on ξ^⊥. Throws StructureError if
/// the structure is not Sasaki or the center is not span{ξ}.
KahlerQuotient kahler_quotient(const AlmostContactMetric& s);

/// Orthogonal splitting ideal ⋊ span{e0}; D is ad e0 on the ideal in the
/// coordinates of `ideal`.
struct StandardDecomposition {
  std::vector<Vector> ideal;
  Vector e0;
  int tau = 1;
  Matrix D;
};

/// Decomposition with ideal = e0^⊥ (e0 is rescaled to g(e0,e0) = ±1, which
/// may need a square root). Throws StructureError if g(e0,e0) = 0.
StandardDecomposition standard_decomposition_for(const MetricLieAlgebra& m, const Vector& e0);
/// e0 ⊥ ideal, g(e0,e0) = τ, ideal is a nilpotent ideal, D = ad e0|ideal.
Verdict check_standard_decomposition(const MetricLieAlgebra& m, const StandardDecomposition& dec);
/// Rank-one standard decompositions: candidates e0 ∈ [g,g]^⊥ (basis vectors of
/// that space) whose orthogonal complement is a nilpotent ideal.
std::vector<StandardDecomposition> find_standard_decompositions(const MetricLieAlgebra& m);
/// Standard decomposition checks plus φ(e0) ∈ ℨ(ideal).
Verdict check_z_standard(const AlmostContactMetric& s, const StandardDecomposition& dec);
/// ad e0 self-adjoint.
bool is_pseudo_iwasawa(const MetricLieAlgebra& m, const StandardDecomposition& dec);

/// Constraint algebras: gl (none), co (f + f* ∈ span{id}), cu (co and [f,J] = 0).
enum class HKind { gl, co, cu };
std::string to_string(HKind k);
HKind parse_hkind(const std::string& s);

/// Hypotheses of the Azencott–Wilson-type modification for a rank-one
/// decomposition: χ ∈ Der(ideal), χ − ad e0 ∈ 𝔥 ∩ so (skew for co, skew and
/// J-commuting for cu, unconstrained for gl), [χ, ad e0] = 0; χ is extended by
/// zero on e0. `chi` is given in the coordinates of dec.ideal. The isometry
/// itself is not computed.
Verdict check_aw_hypotheses(const MetricLieAlgebra& m, const StandardDecomposition& dec, const Matrix& chi, HKind kind,
                            const std::optional<Matrix>& J = std::nullopt);

}  // namespace liegeom
