#pragma once

#include <random>

#include "liegeom/linalg.hpp"

namespace liegeom::testing {

/// Deterministic generator shared by the property tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240607u);
  return gen;
}

/// Small random rational in [-range, range] with denominator up to `den`.
inline Scalar random_rational(int range = 3, int den = 3) {
  std::uniform_int_distribution<int> num(-range * den, range * den);
  std::uniform_int_distribution<int> d(1, den);
  return Scalar::rational(num(rng()), d(rng()));
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, int range = 3, int den = 3) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(range, den);
  }
  return m;
}

inline Matrix random_invertible(std::size_t n) {
  while (true) {
    Matrix m = random_matrix(n, n);
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace liegeom::testing

#include "liegeom/curvature.hpp"
#include "liegeom/notation.hpp"

namespace liegeom::testing {

inline MetricLieAlgebra mla(const char* algebra, const char* metric) {
  LieAlgebra g = parse_algebra(algebra);
  const std::size_t n = g.dim();
  return MetricLieAlgebra(std::move(g), parse_metric(metric, n));
}

inline int random_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random nilpotent Lie algebra of dimension `dim`, built by iterated
/// one-dimensional central extensions with random closed 2-forms.
inline LieAlgebra random_nilpotent(std::size_t dim) {
  const std::size_t start = std::min<std::size_t>(dim, 2 + static_cast<std::size_t>(random_int(0, 1)));
  LieAlgebra g = LieAlgebra::abelian(start);
  while (g.dim() < dim) {
    const std::size_t m = g.dim();
    const auto closed = g.closed_forms(2);
    KForm sigma(m, 2);
    for (const auto& c : closed) {
      if (random_int(0, 2) == 0) sigma += Scalar(random_int(-2, 2)) * c;
    }
    std::vector<KForm> d;
    for (const auto& f : g.differentials()) d.push_back(embed_form(f, m + 1));
    d.push_back(embed_form(sigma, m + 1));
    g = LieAlgebra(std::move(d));
  }
  return g;
}

/// Random nondegenerate symmetric matrix, usually indefinite.
inline Matrix random_metric(std::size_t n) {
  while (true) {
    Matrix a = random_invertible(n);
    Vector signs(n);
    for (auto& s : signs) s = Scalar(random_int(0, 1) ? 1 : -1);
    Matrix g = a.transpose() * Matrix::diagonal(signs) * a;
    // sparse metrics are closer to the catalog; keep some dense ones too
    if (random_int(0, 1)) return Matrix::diagonal(signs);
    return g;
  }
}

/// Random integer combination of a basis of Der(g).
inline Matrix random_derivation(const LieAlgebra& g) {
  const auto der = g.derivation_space();
  Matrix d(g.dim(), g.dim());
  for (const auto& b : der) {
    if (random_int(0, 1)) d += Scalar(random_int(-2, 2)) * b;
  }
  return d;
}

}  // namespace liegeom::testing
