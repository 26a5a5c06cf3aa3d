#include "liegeom/curvature.hpp"

#include <utility>

namespace liegeom {

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, Matrix gram) : alg_(std::move(algebra)), g_(std::move(gram)) {
  if (g_.dim() != alg_.dim()) throw MathError("metric size does not match the algebra");
}

Vector MetricLieAlgebra::trace_vector() const {
  Vector tr(dim());
  for (std::size_t i = 0; i < dim(); ++i) tr[i] = alg_.ad_basis(i).trace();
  return g_.inverse_gram() * tr;
}

Vector levi_civita(const MetricLieAlgebra& m, const Vector& x, const Vector& y) {
  const Matrix& ady = m.algebra().ad(y);
  const Matrix& adx = m.algebra().ad(x);
  return -(m.symmetric_part(ady) * x) - Scalar::rational(1, 2) * (m.adjoint(adx) * y);
}

Matrix connection_matrix(const MetricLieAlgebra& m, const Vector& x) {
  Matrix out(m.dim(), m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) out.set_column(j, levi_civita(m, x, unit_vector(m.dim(), j)));
  return out;
}

RicciData make_ricci_data(const Matrix& ric, const Metric& g) {
  RicciData r{ric, g.raise(ric), std::nullopt};
  const std::size_t n = ric.rows();
  if (n == 0) {
    r.einstein = Scalar();
    return r;
  }
  const Scalar lambda = r.op(0, 0);
  if (r.op == lambda * Matrix::identity(n)) r.einstein = lambda;
  return r;
}

namespace {

/// ⟨α, β⟩ for 2-forms given by their matrices: ½ Tr(G⁻¹ A G⁻¹ Bᵀ).
Scalar two_form_inner(const Matrix& ginv_a_ginv, const Matrix& b) {
  Scalar s;
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t l = 0; l < b.cols(); ++l) {
      if (!b(k, l).is_zero() && !ginv_a_ginv(k, l).is_zero()) s += ginv_a_ginv(k, l) * b(k, l);
    }
  }
  return Scalar::rational(1, 2) * s;
}

}  // namespace

RicciData ricci(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  const LieAlgebra& alg = m.algebra();
  const Matrix& ginv = m.metric().inverse_gram();
  const Vector h = m.trace_vector();

  // d(e_i♭) as matrices, and the raised versions G⁻¹ A G⁻¹
  std::vector<Matrix> dflat(n), dflat_raised(n), adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    dflat[i] = alg.d(m.metric().flat(unit_vector(n, i))).matrix();
    dflat_raised[i] = ginv * dflat[i] * ginv;
    adj[i] = m.adjoint(alg.ad_basis(i));
  }
  // (v⌟dw♭)(H) = dw♭(v, H)
  Matrix ric(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      Scalar two = -(dot(ei, dflat[j] * h) + dot(ej, dflat[i] * h));
      two += two_form_inner(dflat_raised[i], dflat[j]);
      two -= (alg.ad_basis(i) * adj[j]).trace();
      two -= (alg.ad_basis(i) * alg.ad_basis(j)).trace();
      ric(i, j) = ric(j, i) = Scalar::rational(1, 2) * two;
    }
  }
  return make_ricci_data(ric, m.metric());
}

Matrix ricci_from_connection(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  std::vector<Matrix> nabla(n);
  for (std::size_t i = 0; i < n; ++i) nabla[i] = connection_matrix(m, unit_vector(n, i));
  auto nabla_of = [&](const Vector& x) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i].is_zero()) out += x[i] * nabla[i];
    }
    return out;
  };
  Matrix ric(n, n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      Scalar tr;
      for (std::size_t x = 0; x < n; ++x) {
        const Vector bxy = m.algebra().bracket(unit_vector(n, x), unit_vector(n, y));
        const Matrix r = nabla[x] * nabla[y] - nabla[y] * nabla[x] - nabla_of(bxy);
        tr += r(x, z);
      }
      ric(y, z) = tr;
    }
  }
  return ric;
}

std::optional<Scalar> is_einstein(const MetricLieAlgebra& m) { return ricci(m).einstein; }

bool is_ricci_flat(const MetricLieAlgebra& m) { return ricci(m).ric.is_zero(); }

RicciData ricci_of_standard_extension_blockwise(const MetricLieAlgebra& base, const Matrix& d, int tau) {
  if (tau != 1 && tau != -1) throw MathError("tau must be ±1");
  if (!base.algebra().is_derivation(d)) throw MathError("D is not a derivation of the base");
  const std::size_t n = base.dim();
  const RicciData r = ricci(base);
  const Matrix dstar = base.adjoint(d);
  const Matrix ds = base.symmetric_part(d);
  const Scalar t(tau);
  const Matrix& g = base.gram();
  // g(A v, w) as a bilinear matrix is Aᵀ G
  const Matrix extra =
      t * (Scalar::rational(1, 2) * commutator(d, dstar)).transpose() * g - t * d.trace() * ds.transpose() * g;
  Matrix ric(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ric(i, j) = r.ric(i, j) + extra(i, j);
    const Scalar mixed = Scalar::rational(-1, 2) * base.metric().endo_inner(base.algebra().ad_basis(i), d);
    ric(i, n) = ric(n, i) = mixed;
  }
  ric(n, n) = -(ds * ds).trace();
  Matrix gt(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gt(i, j) = g(i, j);
  }
  gt(n, n) = t;
  return make_ricci_data(ric, Metric(gt));
}

RicciData ricci_of_central_extension_blockwise(const MetricLieAlgebra& base, const std::vector<CentralCocycle>& specs) {
  const std::size_t n = base.dim();
  const std::size_t m = specs.size();
  for (const auto& s : specs) {
    if (s.epsilon != 1 && s.epsilon != -1) throw MathError("cocycle sign must be ±1");
    if (s.sigma.dim() != n || s.sigma.degree() != 2) throw MathError("cocycle must be a 2-form on the base");
    if (!base.algebra().d(s.sigma).is_zero()) throw MathError("cocycle is not closed");
  }
  const RicciData r = ricci(base);
  const Metric& g = base.metric();
  Matrix ric(n + m, n + m);
  std::vector<KForm> dflat(n);
  for (std::size_t i = 0; i < n; ++i) dflat[i] = base.algebra().d(g.flat(unit_vector(n, i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v = r.ric(i, j);
      for (const auto& s : specs) {
        const KForm a = contract(unit_vector(n, i), s.sigma);
        const KForm b = contract(unit_vector(n, j), s.sigma);
        v -= Scalar::rational(s.epsilon, 2) * g.form_inner(a, b);
      }
      ric(i, j) = v;
    }
    for (std::size_t s = 0; s < m; ++s) {
      ric(i, n + s) = ric(n + s, i) = Scalar::rational(specs[s].epsilon, 2) * g.form_inner(dflat[i], specs[s].sigma);
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      ric(n + s, n + t) =
          Scalar::rational(specs[s].epsilon * specs[t].epsilon, 2) * g.form_inner(specs[s].sigma, specs[t].sigma);
    }
  }
  Matrix gt(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gt(i, j) = g.gram()(i, j);
  }
  for (std::size_t s = 0; s < m; ++s) gt(n + s, n + s) = Scalar(specs[s].epsilon);
  return make_ricci_data(ric, Metric(gt));
}

}  // namespace liegeom
