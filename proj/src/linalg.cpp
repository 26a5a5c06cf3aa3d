#include "liegeom/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace liegeom {

namespace {

bool any_float(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_float()) return true;
    }
  }
  return false;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  Matrix& a = out.reduced;
  const bool fl = any_float(m);
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = a.rows();
    if (fl) {
      double best = 0;
      for (std::size_t i = row; i < a.rows(); ++i) {
        const double v = std::fabs(a(i, col).to_double());
        if (!a(i, col).is_zero() && v > best) {
          best = v;
          piv = i;
        }
      }
    } else {
      for (std::size_t i = row; i < a.rows(); ++i) {
        if (!a(i, col).is_zero()) {
          piv = i;
          break;
        }
      }
    }
    if (piv == a.rows()) continue;
    swap_rows(a, row, piv);
    const Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    a(row, col) = Scalar(1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
      }
      a(i, col) = Scalar();
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> affine_solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw MathError("affine_solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular = Vector(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) sol.particular[r.pivots[i]] = r.reduced(i, m.cols());
  sol.kernel = nullspace(m);
  return sol;
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const RrefResult r = rref(aug);
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw MathError("matrix is singular");
  return r.reduced.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
  require_square(m, "determinant");
  Matrix a(m);
  const std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i) {
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) return Scalar();
    if (piv != col) {
      swap_rows(a, col, piv);
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vs, std::size_t n) {
  const RrefResult r = rref(Matrix::from_rows(vs, n));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(r.reduced.row(i));
  return out;
}

std::optional<Vector> span_coordinates(const std::vector<Vector>& vs, const Vector& v) {
  auto sol = affine_solve(Matrix::from_columns(vs, v.size()), v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

bool in_span(const std::vector<Vector>& vs, const Vector& v) {
  if (liegeom::is_zero(v)) return true;
  if (vs.empty()) return false;
  return span_coordinates(vs, v).has_value();
}

Signature signature(const Matrix& g) {
  require_square(g, "signature");
  if (!g.is_symmetric()) throw MathError("signature: matrix is not symmetric");
  Matrix a(g);
  const std::size_t n = a.rows();
  Signature s;
  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!a(i, i).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) {
      // zero diagonal: replace e_i by e_i + e_j for an off-diagonal entry
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      piv = pi;
    }
    // symmetric swap of k and piv
    swap_rows(a, k, piv);
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, piv));
    const Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar f = a(i, k) * inv;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (a(k, k).sign() > 0) {
      ++s.p;
    } else {
      ++s.q;
    }
    ++k;
  }
  s.r = n - s.p - s.q;
  return s;
}

Polynomial characteristic_polynomial(const Matrix& a) {
  require_square(a, "characteristic polynomial");
  const std::size_t n = a.rows();
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -Tr(A M_k)/k
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * Matrix::identity(n);
    c[n - k] = -(a * mk).trace() / Scalar(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Polynomial minimal_polynomial(const Matrix& a) {
  require_square(a, "minimal polynomial");
  const std::size_t n = a.rows();
  Polynomial result = Polynomial::constant(Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> krylov{unit_vector(n, i)};
    while (true) {
      const Vector next = a * krylov.back();
      auto coords = span_coordinates(krylov, next);
      if (coords) {
        // next = sum c_j A^j v  =>  x^k - sum c_j x^j annihilates v
        std::vector<Scalar> p(krylov.size() + 1);
        p.back() = Scalar(1);
        for (std::size_t j = 0; j < krylov.size(); ++j) p[j] = -(*coords)[j];
        result = lcm(result, Polynomial(std::move(p)));
        break;
      }
      krylov.push_back(next);
    }
  }
  return result;
}

bool is_semisimple(const Matrix& a) {
  if (any_float(a)) throw MathError("is_semisimple: float matrices are not supported");
  const Polynomial m = minimal_polynomial(a);
  return gcd(m, m.derivative()).degree() <= 0;
}

namespace {

/// Positive divisors of |n| (n != 0) in increasing order; empty if the search
/// would be too large.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  const mpz_class limit = 10000000;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (d > limit) return {};
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool has_rational_coefficients(const Polynomial& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_rational()) return false;
  }
  return true;
}

/// Divide out every rational root of p, appending them (with multiplicity).
Polynomial extract_rational_roots(Polynomial p, std::vector<Eigenvalue>& roots) {
  auto add_root = [&](const Scalar& r) {
    for (auto& e : roots) {
      if (e.re == r && e.im.is_zero()) {
        ++e.multiplicity;
        return;
      }
    }
    roots.push_back({r, Scalar(), 1});
  };
  auto divide_linear = [&](const Scalar& r) {
    Polynomial q, rem;
    p.divmod(Polynomial({-r, Scalar(1)}), q, rem);
    if (!rem.is_zero()) return false;
    p = q;
    add_root(r);
    return true;
  };
  while (p.degree() >= 1 && p.coeff(0).is_zero()) divide_linear(Scalar());
  if (p.degree() < 1) return p;
  // integer-scaled coefficients
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.to_rational().get_den_mpz_t());
  const mpz_class a0 = mpq_class(p.coeff(0).to_rational() * den).get_num();
  const mpz_class an = mpq_class(p.leading().to_rational() * den).get_num();
  const auto ps = divisors(a0);
  const auto qs = divisors(an);
  for (const auto& num : ps) {
    for (const auto& dd : qs) {
      for (int sgn_ : {1, -1}) {
        mpq_class cand(num * sgn_, dd);
        cand.canonicalize();
        while (p.degree() >= 1 && p.evaluate(Scalar(cand)).is_zero()) divide_linear(Scalar(cand));
      }
    }
  }
  return p;
}

}  // namespace

std::string Eigenvalue::str() const {
  if (im.is_zero()) return re.str();
  std::string imag = im.abs().str();
  const bool compound = !im.is_rational();
  if (compound) imag = "(" + imag + ")";
  std::string out = re.is_zero() ? "" : re.str();
  out += im.sign() < 0 ? "-" : (out.empty() ? "" : "+");
  if (imag != "1") out += imag + "*";
  return out + "i";
}

bool Spectrum::all_rational() const {
  if (residual.degree() > 0) return false;
  for (const auto& e : values) {
    if (!e.im.is_zero() || !e.re.is_rational()) return false;
  }
  return true;
}

std::string Spectrum::str() const {
  std::string out = "[";
  bool first = true;
  for (const auto& e : values) {
    for (std::size_t k = 0; k < e.multiplicity; ++k) {
      if (!first) out += ", ";
      first = false;
      out += e.str();
    }
  }
  if (residual.degree() > 0) {
    if (!first) out += ", ";
    out += "roots of " + residual.str();
  }
  return out + "]";
}

Spectrum spectrum(const Matrix& a) {
  Spectrum s;
  Polynomial p = characteristic_polynomial(a);
  if (!has_rational_coefficients(p)) {
    s.residual = p;
    return s;
  }
  p = extract_rational_roots(p, s.values);
  if (p.degree() >= 2) {
    // Squarefree part; handles residuals that are powers of one quadratic.
    Polynomial q, r;
    p.divmod(gcd(p, p.derivative()), q, r);
    q = q.monic();
    if (q.degree() == 2 && p.degree() % 2 == 0) {
      Polynomial pw = Polynomial::constant(Scalar(1));
      for (int k = 0; k < p.degree() / 2; ++k) pw = pw * q;
      if (pw == p.monic()) {
        const Scalar b = q.coeff(1);
        const Scalar c = q.coeff(0);
        const Scalar disc = b * b - Scalar(4) * c;  // negative: no rational roots left
        const Scalar re = -b / Scalar(2);
        const mpq_class d = disc.to_rational();
        const std::size_t mult = static_cast<std::size_t>(p.degree() / 2);
        if (sgn(d) < 0) {
          const Scalar im = Scalar::sqrt_of(-d) / Scalar(2);
          s.values.push_back({re, im, mult});
          s.values.push_back({re, -im, mult});
        } else {
          const Scalar root = Scalar::sqrt_of(d) / Scalar(2);
          s.values.push_back({re + root, Scalar(), mult});
          s.values.push_back({re - root, Scalar(), mult});
        }
        p = Polynomial::constant(Scalar(1));
      }
    }
  }
  s.residual = p.degree() > 0 ? p.monic() : Polynomial::constant(Scalar(1));
  return s;
}

}  // namespace liegeom
