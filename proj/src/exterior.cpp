#include "liegeom/exterior.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace liegeom {

namespace {

void enumerate(std::size_t dim, std::size_t k, std::size_t start, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= dim; ++i) {
    cur.push_back(i);
    enumerate(dim, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<MultiIndex>& multi_indices(std::size_t dim, std::size_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<MultiIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({dim, k});
  if (inserted && k <= dim) {
    MultiIndex cur;
    enumerate(dim, k, 0, cur, it->second);
  }
  return it->second;
}

std::size_t multi_index_position(const MultiIndex& sorted, std::size_t dim) {
  const auto& all = multi_indices(dim, sorted.size());
  auto it = std::lower_bound(all.begin(), all.end(), sorted);
  if (it == all.end() || *it != sorted) throw MathError("multi-index out of range");
  return static_cast<std::size_t>(it - all.begin());
}

int sort_with_sign(MultiIndex& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

KForm::KForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  c_.resize(multi_indices(dim, degree).size());
}

KForm KForm::basis(std::size_t dim, MultiIndex idx) {
  KForm f(dim, idx.size());
  f.add(std::move(idx), Scalar(1));
  return f;
}

KForm KForm::one_form(const Vector& coeffs) {
  KForm f(coeffs.size(), 1);
  f.c_ = coeffs;
  return f;
}

KForm KForm::from_matrix(const Matrix& a) {
  require_square(a, "2-form matrix");
  if (a.transpose() != -a) throw MathError("2-form matrix is not antisymmetric");
  KForm f(a.rows(), 2);
  const auto& idx = multi_indices(a.rows(), 2);
  for (std::size_t p = 0; p < idx.size(); ++p) f.c_[p] = a(idx[p][0], idx[p][1]);
  return f;
}

Scalar KForm::get(MultiIndex idx) const {
  if (idx.size() != degree_) throw MathError("KForm::get: wrong number of indices");
  for (auto i : idx) {
    if (i >= dim_) throw MathError("KForm::get: index out of range");
  }
  const int s = sort_with_sign(idx);
  if (s == 0) return Scalar();
  const Scalar& c = c_[multi_index_position(idx, dim_)];
  return s > 0 ? c : -c;
}

void KForm::add(MultiIndex idx, const Scalar& c) {
  if (idx.size() != degree_) throw MathError("KForm::add: wrong number of indices");
  for (auto i : idx) {
    if (i >= dim_) throw MathError("KForm::add: index out of range");
  }
  const int s = sort_with_sign(idx);
  if (s == 0) return;
  Scalar& slot = c_[multi_index_position(idx, dim_)];
  if (s > 0) {
    slot += c;
  } else {
    slot -= c;
  }
}

bool KForm::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Scalar KForm::evaluate(const std::vector<Vector>& vs) const {
  if (vs.size() != degree_) throw MathError("KForm::evaluate: wrong number of vectors");
  const auto& idx = multi_indices(dim_, degree_);
  Scalar total;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (c_[p].is_zero()) continue;
    Matrix minor(degree_, degree_);
    for (std::size_t r = 0; r < degree_; ++r) {
      for (std::size_t s = 0; s < degree_; ++s) minor(r, s) = vs[s].at(idx[p][r]);
    }
    total += c_[p] * determinant(minor);
  }
  return total;
}

Matrix KForm::matrix() const {
  if (degree_ != 2) throw MathError("KForm::matrix needs a 2-form");
  Matrix a(dim_, dim_);
  const auto& idx = multi_indices(dim_, 2);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    a(idx[p][0], idx[p][1]) = c_[p];
    a(idx[p][1], idx[p][0]) = -c_[p];
  }
  return a;
}

Vector KForm::as_vector() const {
  if (degree_ != 1) throw MathError("KForm::as_vector needs a 1-form");
  return c_;
}

void KForm::require_same_shape(const KForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw MathError("forms of different shape");
}

KForm& KForm::operator+=(const KForm& o) {
  require_same_shape(o);
  for (std::size_t p = 0; p < c_.size(); ++p) c_[p] += o.c_[p];
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  require_same_shape(o);
  for (std::size_t p = 0; p < c_.size(); ++p) c_[p] -= o.c_[p];
  return *this;
}

KForm& KForm::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator==(const KForm& a, const KForm& b) {
  if (a.dim_ != b.dim_ || a.degree_ != b.degree_) return false;
  for (std::size_t p = 0; p < a.c_.size(); ++p) {
    if (a.c_[p] != b.c_[p]) return false;
  }
  return true;
}

std::string KForm::str() const {
  const auto& idx = multi_indices(dim_, degree_);
  std::string out;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (c_[p].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[p].str() + "*e^{";
    for (std::size_t m = 0; m < idx[p].size(); ++m) {
      if (m) out += ",";
      out += std::to_string(idx[p][m] + 1);
    }
    out += "}";
  }
  return out.empty() ? "0" : out;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw MathError("wedge: dimension mismatch");
  KForm out(a.dim(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.dim()) return out;
  const auto& ia = multi_indices(a.dim(), a.degree());
  const auto& ib = multi_indices(b.dim(), b.degree());
  for (std::size_t p = 0; p < ia.size(); ++p) {
    if (a.coeffs()[p].is_zero()) continue;
    for (std::size_t r = 0; r < ib.size(); ++r) {
      if (b.coeffs()[r].is_zero()) continue;
      MultiIndex joined = ia[p];
      joined.insert(joined.end(), ib[r].begin(), ib[r].end());
      out.add(std::move(joined), a.coeffs()[p] * b.coeffs()[r]);
    }
  }
  return out;
}

KForm contract(const Vector& v, const KForm& a) {
  if (v.size() != a.dim()) throw MathError("contract: dimension mismatch");
  if (a.degree() == 0) throw MathError("contract: cannot contract a 0-form");
  KForm out(a.dim(), a.degree() - 1);
  const auto& idx = multi_indices(a.dim(), a.degree());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (a.coeffs()[p].is_zero()) continue;
    for (std::size_t m = 0; m < idx[p].size(); ++m) {
      const Scalar& vm = v[idx[p][m]];
      if (vm.is_zero()) continue;
      MultiIndex rest = idx[p];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
      const Scalar c = a.coeffs()[p] * vm;
      out.add(std::move(rest), m % 2 == 0 ? c : -c);
    }
  }
  return out;
}

KForm embed_form(const KForm& f, std::size_t new_dim, const std::vector<std::size_t>& index_map) {
  if (index_map.size() != f.dim()) throw MathError("embed_form: index map has the wrong length");
  KForm out(new_dim, f.degree());
  const auto& idx = multi_indices(f.dim(), f.degree());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (f.coeffs()[p].is_zero()) continue;
    MultiIndex mapped;
    for (auto i : idx[p]) mapped.push_back(index_map[i]);
    out.add(std::move(mapped), f.coeffs()[p]);
  }
  return out;
}

KForm embed_form(const KForm& f, std::size_t new_dim) {
  std::vector<std::size_t> map(f.dim());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return embed_form(f, new_dim, map);
}

Metric::Metric(Matrix gram) : g_(std::move(gram)) {
  require_square(g_, "metric");
  if (!g_.is_symmetric()) throw MathError("metric is not symmetric");
  try {
    ginv_ = liegeom::inverse(g_);
  } catch (const MathError&) {
    throw MathError("metric is degenerate");
  }
}

Scalar Metric::operator()(const Vector& x, const Vector& y) const { return dot(x, g_ * y); }

KForm Metric::flat(const Vector& v) const { return KForm::one_form(g_ * v); }

Vector Metric::sharp(const KForm& alpha) const { return ginv_ * alpha.as_vector(); }

Matrix Metric::adjoint(const Matrix& f) const { return ginv_ * f.transpose() * g_; }

Matrix Metric::symmetric_part(const Matrix& f) const { return Scalar::rational(1, 2) * (f + adjoint(f)); }

Matrix Metric::skew_part(const Matrix& f) const { return Scalar::rational(1, 2) * (f - adjoint(f)); }

Scalar Metric::endo_inner(const Matrix& f, const Matrix& h) const { return (f * adjoint(h)).trace(); }

Scalar Metric::form_inner(const KForm& a, const KForm& b) const {
  if (a.degree() != b.degree() || a.dim() != dim() || b.dim() != dim()) {
    throw MathError("form_inner: forms of different shape");
  }
  const std::size_t k = a.degree();
  const auto& idx = multi_indices(dim(), k);
  Scalar total;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (a.coeffs()[p].is_zero()) continue;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      if (b.coeffs()[r].is_zero()) continue;
      Matrix minor(k, k);
      for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t t = 0; t < k; ++t) minor(s, t) = ginv_(idx[p][s], idx[r][t]);
      }
      total += a.coeffs()[p] * b.coeffs()[r] * determinant(minor);
    }
  }
  return total;
}

Matrix Metric::two_form_to_endo(const KForm& sigma) const { return ginv_ * sigma.matrix(); }

KForm Metric::endo_to_two_form(const Matrix& s) const { return KForm::from_matrix(g_ * s); }

Matrix Metric::raise(const Matrix& bilinear) const { return ginv_ * bilinear; }

}  // namespace liegeom
