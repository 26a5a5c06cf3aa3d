#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegeom/structures.hpp"

namespace liegeom {

/// Basis of 𝔥 ∩ Der(g) for 𝔥 ∈ {gl, co(p,q), cu(p,q)}.
struct ConstrainedDerivationSpace {
  HKind kind = HKind::gl;
  std::vector<Matrix> basis;
};

/// Solves the derivation identity together with the 𝔥 membership constraints:
/// co: f + f* − (2 Tr f / n) id = 0; cu: additionally [f, J] = 0.
/// Throws MathError when cu is requested without J.
ConstrainedDerivationSpace constrained_derivations(const MetricLieAlgebra& m, HKind kind,
                                                   const std::optional<Matrix>& J = std::nullopt);

struct NikolayevskyResult {
  HKind kind = HKind::gl;
  std::size_t space_dim = 0;
  /// The semisimple derivation, when one was found.
  std::optional<Matrix> N;
  bool semisimple = false;
  /// Affine family of all solutions of Tr(Nψ) = Tr ψ (particular + span).
  Matrix particular;
  std::vector<Matrix> kernel;
  std::string diagnostic;
};

/// Solves Tr(Nψ_i) = Tr ψ_i over the space, starting from the minimum
/// Frobenius-norm solution and searching a small rational grid along the
/// solution family for a semisimple representative.
NikolayevskyResult nikolayevsky_derivation(const ConstrainedDerivationSpace& space);
/// Tr(Nψ) = Tr ψ for every basis ψ.
bool satisfies_nikolayevsky_equations(const ConstrainedDerivationSpace& space, const Matrix& N);

struct AffineFamily {
  Matrix particular;
  std::vector<Matrix> kernel;
  bool contains(const Matrix& d) const;
};

/// {D ∈ Der(g) : [D, J] = 0, D + D* = 2 id}; nullopt when empty.
std::optional<AffineFamily> symmetric_part_identity_family(const MetricLieAlgebra& m, const Matrix& J);

/// The cu-Nikolayevsky derivation rescaled to symmetric part id, i.e. the
/// canonical derivation for the Sasaki-Einstein builder; nullopt when N = 0 or
/// no semisimple representative was found.
std::optional<Matrix> canonical_sasaki_einstein_derivation(const MetricLieAlgebra& m, const Matrix& J);

}  // namespace liegeom
