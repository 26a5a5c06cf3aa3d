#include "liegeom/liealg.hpp"

#include <utility>

namespace liegeom {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

LieAlgebra::LieAlgebra(std::vector<KForm> d, std::vector<std::string> labels, bool check_jacobi)
    : n_(d.size()), d_(std::move(d)), labels_(std::move(labels)) {
  for (const auto& f : d_) {
    if (f.dim() != n_ || f.degree() != 2) throw MathError("each differential must be a 2-form on the algebra");
  }
  if (labels_.empty()) labels_ = default_labels(n_);
  if (labels_.size() != n_) throw MathError("label count does not match dimension");
  build_constants();
  if (check_jacobi) {
    if (auto t = jacobi_violation()) {
      throw JacobiError("Jacobi identity fails on (" + labels_[(*t)[0]] + ", " + labels_[(*t)[1]] + ", " +
                            labels_[(*t)[2]] + ")",
                        *t);
    }
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(std::vector<KForm>(dim, KForm(dim, 2))); }

LieAlgebra LieAlgebra::from_structure_constants(std::size_t dim, const std::vector<Scalar>& c,
                                                std::vector<std::string> labels, bool check_jacobi) {
  if (c.size() != dim * dim * dim) throw MathError("structure constant array has the wrong size");
  std::vector<KForm> d(dim, KForm(dim, 2));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) {
        const Scalar& cij = c[(k * dim + i) * dim + j];
        if (cij != -c[(k * dim + j) * dim + i]) throw MathError("structure constants are not antisymmetric");
        if (!cij.is_zero()) d[k].add({i, j}, -cij);
      }
    }
  }
  return LieAlgebra(std::move(d), std::move(labels), check_jacobi);
}

void LieAlgebra::build_constants() {
  c_.assign(n_ * n_ * n_, Scalar());
  const auto& idx = multi_indices(n_, 2);
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const Scalar& v = d_[k].coeffs()[p];
      if (v.is_zero()) continue;
      const std::size_t i = idx[p][0], j = idx[p][1];
      c_[(k * n_ + i) * n_ + j] = -v;
      c_[(k * n_ + j) * n_ + i] = v;
    }
  }
  ad_.assign(n_, Matrix(n_, n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) ad_[i](k, j) = c(k, i, j);
    }
  }
}

std::vector<Vector> LieAlgebra::basis() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n_; ++i) out.push_back(unit_vector(n_, i));
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw MathError("bracket: dimension mismatch");
  Vector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& ck = c(k, i, j);
        if (!ck.is_zero()) r[k] += xy * ck;
      }
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != n_) throw MathError("ad: dimension mismatch");
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i].is_zero()) m += x[i] * ad_[i];
  }
  return m;
}

KForm LieAlgebra::d(const KForm& a) const {
  if (a.dim() != n_) throw MathError("d: dimension mismatch");
  KForm out(n_, a.degree() + 1);
  if (a.degree() + 1 > n_) return out;
  const auto& idx = multi_indices(n_, a.degree());
  const auto& pairs = multi_indices(n_, 2);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const Scalar& coef = a.coeffs()[p];
    if (coef.is_zero()) continue;
    const MultiIndex& I = idx[p];
    for (std::size_t m = 0; m < I.size(); ++m) {
      const KForm& de = d_[I[m]];
      for (std::size_t r = 0; r < pairs.size(); ++r) {
        const Scalar& dv = de.coeffs()[r];
        if (dv.is_zero()) continue;
        MultiIndex J;
        J.reserve(I.size() + 1);
        J.insert(J.end(), I.begin(), I.begin() + static_cast<std::ptrdiff_t>(m));
        J.push_back(pairs[r][0]);
        J.push_back(pairs[r][1]);
        J.insert(J.end(), I.begin() + static_cast<std::ptrdiff_t>(m) + 1, I.end());
        const Scalar c = coef * dv;
        out.add(std::move(J), m % 2 == 0 ? c : -c);
      }
    }
  }
  return out;
}

Matrix LieAlgebra::d_matrix(std::size_t k) const {
  const auto& src = multi_indices(n_, k);
  Matrix m(multi_indices(n_, k + 1).size(), src.size());
  for (std::size_t p = 0; p < src.size(); ++p) m.set_column(p, d(KForm::basis(n_, src[p])).coeffs());
  return m;
}

std::vector<KForm> LieAlgebra::closed_forms(std::size_t k) const {
  std::vector<KForm> out;
  for (const auto& v : nullspace(d_matrix(k))) {
    KForm f(n_, k);
    for (std::size_t p = 0; p < v.size(); ++p) f.at_position(p) = v[p];
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> LieAlgebra::jacobi_violation() const {
  const auto basis_vecs = basis();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Vector eij = bracket(basis_vecs[i], basis_vecs[j]);
      for (std::size_t k = j + 1; k < n_; ++k) {
        Vector s = bracket(eij, basis_vecs[k]);
        s = s + bracket(bracket(basis_vecs[j], basis_vecs[k]), basis_vecs[i]);
        s = s + bracket(bracket(basis_vecs[k], basis_vecs[i]), basis_vecs[j]);
        if (!is_zero(s)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool LieAlgebra::d_squared_zero() const {
  for (const auto& f : d_) {
    if (!d(f).is_zero()) return false;
  }
  return true;
}

bool LieAlgebra::is_derivation(const Matrix& f) const {
  if (f.rows() != n_ || f.cols() != n_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Vector ei = unit_vector(n_, i), ej = unit_vector(n_, j);
      const Vector lhs = f * bracket(ei, ej);
      const Vector rhs = bracket(f * ei, ej) + bracket(ei, f * ej);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Matrix LieAlgebra::derivation_equations() const {
  // D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] = 0, component k, for i < j:
  //   sum_l c^l_ij D_kl - sum_l D_li c^k_lj - sum_l D_lj c^k_il
  const std::size_t npairs = n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
  Matrix eq(npairs * n_, n_ * n_);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k, ++row) {
        for (std::size_t l = 0; l < n_; ++l) {
          if (!c(l, i, j).is_zero()) eq(row, k * n_ + l) += c(l, i, j);
          if (!c(k, l, j).is_zero()) eq(row, l * n_ + i) -= c(k, l, j);
          if (!c(k, i, l).is_zero()) eq(row, l * n_ + j) -= c(k, i, l);
        }
      }
    }
  }
  return eq;
}

std::vector<Matrix> LieAlgebra::derivation_space() const {
  std::vector<Matrix> out;
  for (const auto& v : nullspace(derivation_equations())) {
    Matrix m(n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) m(a, b) = v[a * n_ + b];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Vector> LieAlgebra::bracket_span(const std::vector<Vector>& a, const std::vector<Vector>& b) const {
  std::vector<Vector> gens;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Vector z = bracket(x, y);
      if (!is_zero(z)) gens.push_back(std::move(z));
    }
  }
  if (gens.empty()) return {};
  return span_basis(gens, n_);
}

std::vector<std::vector<Vector>> LieAlgebra::lower_central_series() const {
  std::vector<std::vector<Vector>> series{basis()};
  while (true) {
    auto next = bracket_span(basis(), series.back());
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
    if (series.back().empty()) break;
  }
  return series;
}

std::vector<std::vector<Vector>> LieAlgebra::derived_series() const {
  std::vector<std::vector<Vector>> series{basis()};
  while (true) {
    auto next = bracket_span(series.back(), series.back());
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
    if (series.back().empty()) break;
  }
  return series;
}

std::vector<Vector> LieAlgebra::center() const {
  // [x, e_j] = -ad(e_j) x
  Matrix stacked(n_ * n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t s = 0; s < n_; ++s) stacked(j * n_ + r, s) = ad_[j](r, s);
    }
  }
  return nullspace(stacked);
}

bool LieAlgebra::is_subalgebra(const std::vector<Vector>& span) const {
  for (const auto& z : bracket_span(span, span)) {
    if (!in_span(span, z)) return false;
  }
  return true;
}

bool LieAlgebra::is_ideal(const std::vector<Vector>& span) const {
  for (const auto& z : bracket_span(basis(), span)) {
    if (!in_span(span, z)) return false;
  }
  return true;
}

bool LieAlgebra::is_nilpotent_subalgebra(const std::vector<Vector>& span) const {
  std::vector<Vector> cur = span_basis(span, n_);
  while (!cur.empty()) {
    auto next = bracket_span(span, cur);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

bool LieAlgebra::in_center(const Vector& v) const { return ad(v).is_zero(); }

bool LieAlgebra::in_nilradical(const Vector& v) const {
  std::vector<Vector> span = bracket_span(basis(), basis());
  span.push_back(v);
  return is_nilpotent_subalgebra(span);
}

StructuralReport structural_report(const LieAlgebra& g) {
  StructuralReport r;
  const auto lcs = g.lower_central_series();
  r.nilpotent = lcs.back().empty() || g.dim() == 0;
  r.step = r.nilpotent ? lcs.size() - 1 : 0;
  if (g.dim() == 0) r.step = 0;
  const auto ds = g.derived_series();
  r.solvable = ds.back().empty() || g.dim() == 0;
  r.center = g.center();
  r.unimodular = true;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!g.ad_basis(i).trace().is_zero()) r.unimodular = false;
  }
  r.killing = Matrix(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) r.killing(i, j) = (g.ad_basis(i) * g.ad_basis(j)).trace();
  }
  return r;
}

}  // namespace liegeom
