#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegeom/nikolayevsky.hpp"

namespace liegeom {

/// Central extension: one new basis vector per cocycle, appended after the
/// base, with d e^{new} = σ and g(e_new, e_new) = ε. Throws StructureError if a
/// cocycle is not closed.
MetricLieAlgebra central_extension(const MetricLieAlgebra& base, const std::vector<CentralCocycle>& specs);

/// g ⋊_D span{e0} with e0 appended last and metric g + τ e0⊗e0. Throws
/// StructureError if D is not a derivation.
struct StandardExtension {
  MetricLieAlgebra total;
  StandardDecomposition dec;
};
StandardExtension standard_extension(const MetricLieAlgebra& base, const Matrix& d, int tau);

/// Generalized nilsoliton equation
///   Ric = τ(−Tr((D^s)²) id − ½[D, D*] + (Tr D) D^s)
/// plus the two sufficient conditions for the extension to be Einstein with
/// λ = −τ Tr((D^s)²): Tr(ad v ∘ D*) = 0 for all v, or −Tr D is not an
/// eigenvalue of D.
struct NilsolitonReport {
  Verdict verdict;
  bool equation = false;
  bool trace_condition = false;
  bool trace_not_eigenvalue = false;
  Scalar lambda;
  /// "trace-condition", "trace-not-eigenvalue" or "none".
  std::string route;
  bool einstein() const { return equation && (trace_condition || trace_not_eigenvalue); }
};
NilsolitonReport check_generalized_nilsoliton(const MetricLieAlgebra& base, const Matrix& d, int tau);

/// Input of the constructive z-standard Sasaki extension of a pseudo-Kähler
/// Lie algebra (ǧ, J, ω) by a derivation Ď, a sign τ and a scalar h.
struct ZStandardData {
  PseudoKahler reduction;
  Matrix Dcheck;
  int tau = -1;
  Scalar h;
};

/// The bullet hypotheses: ǧ nilpotent and pseudo-Kähler, Ď a derivation,
/// [Ď, J] = 0, d(Ďω) = 0, [Ď^s, Ď^a] = hĎ^s − 2(Ď^s)².
Verdict check_z_standard_data(const ZStandardData& data);

/// Output basis order: (ǧ..., b, ξ, e0). The metric is ǧ + τ b² + ξ² + τ e0².
struct ZStandardSasaki {
  AlmostContactMetric structure;
  StandardDecomposition dec;
  std::size_t b = 0, xi = 0, e0 = 0;
};

/// Builds the z-standard Sasaki Lie algebra:
///   dξ* = 2ω, db* = τĎω, [e0, x] = Ďx, [e0, b] = hb − 2τξ, [e0, ξ] = 0,
///   φ(x) = Jx + τ g(b, x) e0, φ(e0) = −b.
/// Throws StructureError listing the violated hypotheses.
ZStandardSasaki build_z_standard_sasaki(const ZStandardData& data);

/// The z-standard almost contact structure on an algebra presented in the
/// canonical basis order (ǧ..., b, ξ, e0): ξ = e_{m+1}, φ(e0) = −b and
/// φ(x) = J̌x + τ g(b, x) e0 for x ∈ span(ǧ, b, ξ), where τ = g(e0, e0) and J̌ is
/// extended by zero on b and ξ.
AlmostContactMetric z_standard_structure(const MetricLieAlgebra& m, const Matrix& Jcheck);

/// τ = −1, h = 2; requires Ď^s = id.
ZStandardSasaki build_sasaki_einstein(const PseudoKahler& reduction, const Matrix& Dcheck);

/// Output basis order (ǧ..., b, e0); db* = 2ω, [e0, x] = Ďx, [e0, b] = 2b,
/// metric ǧ − b² − e0², J̃(x) = Jx − g(b, x) e0, J̃(e0) = −b. Requires Ď^s = id.
struct KahlerEinsteinExtension {
  PseudoKahler structure;
  StandardDecomposition dec;
};
KahlerEinsteinExtension build_kahler_einstein(const PseudoKahler& reduction, const Matrix& Dcheck);

/// Inverse of build_z_standard_sasaki: recovers (ǧ, J, ω, Ď, τ, h) with
/// b = −φ(e0), realizing ǧ on the orthogonal complement of {b, ξ, e0}.
struct KahlerReduction {
  ZStandardData data;
  std::vector<Vector> basis;
  Vector b, xi, e0;
};
KahlerReduction kahler_reduction(const AlmostContactMetric& s, const StandardDecomposition& dec);

/// Einstein standard extension by the rescaled co-Nikolayevsky derivation of
/// a Ricci-flat metric Lie algebra (τ = +1, D^s = id, λ = −dim). Returns
/// nullopt when N = 0; throws StructureError when the base is not Ricci-flat.
struct NikolayevskyEinstein {
  Matrix N;
  Matrix D;
  StandardExtension extension;
  Scalar lambda;
};
std::optional<NikolayevskyEinstein> einstein_extension_with_nikolayevsky(const MetricLieAlgebra& base);

}  // namespace liegeom
