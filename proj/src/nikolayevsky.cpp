#include "liegeom/nikolayevsky.hpp"

#include <utility>

namespace liegeom {

namespace {

/// Rows expressing f + f* − (2 Tr f / n) id = 0 in the row-major unknowns of f.
void append_co_rows(const Metric& g, std::vector<Vector>& rows) {
  const std::size_t n = g.dim();
  const Matrix& gram = g.gram();
  const Matrix& ginv = g.inverse_gram();
  const Scalar two_over_n = Scalar(2) / Scalar(static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector row(n * n);
      row[i * n + j] += Scalar(1);
      // (f*)(i, j) = Σ_{a,b} Ginv(i, b) f(a, b) G(a, j)
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) row[a * n + b] += ginv(i, b) * gram(a, j);
      }
      if (i == j) {
        for (std::size_t a = 0; a < n; ++a) row[a * n + a] -= two_over_n;
      }
      rows.push_back(std::move(row));
    }
  }
}

/// Rows expressing fJ − Jf = 0.
void append_commute_rows(const Matrix& J, std::vector<Vector>& rows) {
  const std::size_t n = J.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector row(n * n);
      for (std::size_t b = 0; b < n; ++b) row[i * n + b] += J(b, j);
      for (std::size_t a = 0; a < n; ++a) row[a * n + j] -= J(i, a);
      rows.push_back(std::move(row));
    }
  }
}

std::vector<Vector> derivation_rows(const LieAlgebra& g) {
  const Matrix eq = g.derivation_equations();
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < eq.rows(); ++r) rows.push_back(eq.row(r));
  return rows;
}

Matrix unflatten(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m(a, b) = v[a * n + b];
  }
  return m;
}

Matrix combination(const std::vector<Matrix>& basis, const Vector& t, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!t[i].is_zero()) out += t[i] * basis[i];
  }
  return out;
}

Scalar frobenius(const Matrix& a, const Matrix& b) { return (a.transpose() * b).trace(); }

bool semisimple_exact(const Matrix& a) {
  try {
    return is_semisimple(a);
  } catch (const MathError&) {
    return false;
  }
}

}  // namespace

ConstrainedDerivationSpace constrained_derivations(const MetricLieAlgebra& m, HKind kind,
                                                   const std::optional<Matrix>& J) {
  const std::size_t n = m.dim();
  std::vector<Vector> rows = derivation_rows(m.algebra());
  if (kind != HKind::gl) append_co_rows(m.metric(), rows);
  if (kind == HKind::cu) {
    if (!J) throw MathError("cu constraints need a complex structure J");
    if (J->rows() != n || J->cols() != n) throw MathError("J has the wrong size");
    append_commute_rows(*J, rows);
  }
  ConstrainedDerivationSpace space{kind, {}};
  const Matrix system = rows.empty() ? Matrix(0, n * n) : Matrix::from_rows(rows, n * n);
  for (const auto& v : nullspace(system)) space.basis.push_back(unflatten(v, n));
  return space;
}

bool satisfies_nikolayevsky_equations(const ConstrainedDerivationSpace& space, const Matrix& N) {
  for (const auto& psi : space.basis) {
    if ((N * psi).trace() != psi.trace()) return false;
  }
  return true;
}

NikolayevskyResult nikolayevsky_derivation(const ConstrainedDerivationSpace& space) {
  NikolayevskyResult r;
  r.kind = space.kind;
  r.space_dim = space.basis.size();
  const std::size_t k = space.basis.size();
  const std::size_t n = k ? space.basis.front().rows() : 0;
  if (k == 0) {
    r.N = Matrix(n, n);
    r.particular = Matrix(n, n);
    r.semisimple = true;
    r.diagnostic = "empty derivation space";
    return r;
  }
  // Tr(Nψ_i) = Tr ψ_i with N = Σ t_j ψ_j
  Matrix a(k, k);
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = space.basis[i].trace();
    for (std::size_t j = 0; j < k; ++j) a(i, j) = (space.basis[j] * space.basis[i]).trace();
  }
  const auto sol = affine_solve(a, rhs);
  if (!sol) {
    r.diagnostic = "the trace equations Tr(N psi) = Tr psi have no solution";
    return r;
  }
  // minimum Frobenius norm along t0 + K s
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = frobenius(space.basis[i], space.basis[j]);
  }
  Vector t = sol->particular;
  const auto& kern = sol->kernel;
  if (!kern.empty()) {
    const std::size_t q = kern.size();
    const Matrix kmat = Matrix::from_columns(kern, k);
    const Matrix lhs = kmat.transpose() * gram * kmat;
    const Vector b = -(kmat.transpose() * (gram * t));
    const auto s = affine_solve(lhs, b);
    if (s) t = t + kmat * s->particular;
    (void)q;
  }
  r.particular = combination(space.basis, t, n);
  for (const auto& kv : kern) r.kernel.push_back(combination(space.basis, kv, n));

  if (semisimple_exact(r.particular)) {
    r.N = r.particular;
    r.semisimple = true;
    return r;
  }
  // grid search over single directions, then pairs, with steps of 1/2 in [-2, 2]
  std::vector<Scalar> grid;
  for (int i = -4; i <= 4; ++i) {
    if (i != 0) grid.push_back(Scalar::rational(i, 2));
  }
  for (std::size_t i = 0; i < r.kernel.size(); ++i) {
    for (const auto& c : grid) {
      const Matrix cand = r.particular + c * r.kernel[i];
      if (semisimple_exact(cand)) {
        r.N = cand;
        r.semisimple = true;
        return r;
      }
    }
  }
  for (std::size_t i = 0; i < r.kernel.size(); ++i) {
    for (std::size_t j = i + 1; j < r.kernel.size(); ++j) {
      for (const auto& ci : grid) {
        for (const auto& cj : grid) {
          const Matrix cand = r.particular + ci * r.kernel[i] + cj * r.kernel[j];
          if (semisimple_exact(cand)) {
            r.N = cand;
            r.semisimple = true;
            return r;
          }
        }
      }
    }
  }
  r.diagnostic = "no semisimple representative found on the search grid; returning the affine family";
  return r;
}

bool AffineFamily::contains(const Matrix& d) const {
  const std::size_t n = particular.rows();
  if (d.rows() != n || d.cols() != n) return false;
  const Matrix diff = d - particular;
  if (kernel.empty()) return diff.is_zero();
  std::vector<Vector> flat;
  for (const auto& k : kernel) {
    Vector v(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) v[a * n + b] = k(a, b);
    }
    flat.push_back(std::move(v));
  }
  Vector target(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) target[a * n + b] = diff(a, b);
  }
  return in_span(flat, target);
}

std::optional<AffineFamily> symmetric_part_identity_family(const MetricLieAlgebra& m, const Matrix& J) {
  const std::size_t n = m.dim();
  std::vector<Vector> rows = derivation_rows(m.algebra());
  const std::size_t homogeneous = rows.size();
  append_commute_rows(J, rows);
  const std::size_t with_j = rows.size();
  // f + f* = 2 id
  const Matrix& gram = m.gram();
  const Matrix& ginv = m.metric().inverse_gram();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector row(n * n);
      row[i * n + j] += Scalar(1);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) row[a * n + b] += ginv(i, b) * gram(a, j);
      }
      rows.push_back(std::move(row));
    }
  }
  Vector rhs(rows.size());
  for (std::size_t i = 0; i < n; ++i) rhs[with_j + i * n + i] = Scalar(2);
  (void)homogeneous;
  const auto sol = affine_solve(Matrix::from_rows(rows, n * n), rhs);
  if (!sol) return std::nullopt;
  AffineFamily fam{unflatten(sol->particular, n), {}};
  for (const auto& k : sol->kernel) fam.kernel.push_back(unflatten(k, n));
  return fam;
}

std::optional<Matrix> canonical_sasaki_einstein_derivation(const MetricLieAlgebra& m, const Matrix& J) {
  const auto res = nikolayevsky_derivation(constrained_derivations(m, HKind::cu, J));
  if (!res.N) return std::nullopt;
  const Scalar tr = res.N->trace();
  if (tr.is_zero()) return std::nullopt;
  return (Scalar(static_cast<long>(m.dim())) / tr) * *res.N;
}

}  // namespace liegeom
