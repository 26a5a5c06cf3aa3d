#include "liegeom/polynomial.hpp"

#include <utility>

namespace liegeom {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar();
  return c_[static_cast<std::size_t>(k)];
}

Scalar Polynomial::leading() const {
  if (c_.empty()) return Scalar();
  return c_.back();
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return leading().inverse() * *this;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Scalar(static_cast<long>(k)) * c_[k]);
  return Polynomial(std::move(d));
}

Scalar Polynomial::evaluate(const Scalar& t) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& a) const {
  require_square(a, "polynomial evaluation");
  const std::size_t n = a.rows();
  Matrix acc(n, n);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it * Matrix::identity(n);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  std::vector<Scalar> c(p.c_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    if (a.c_[k] != b.c_[k]) return false;
  }
  return true;
}

void Polynomial::divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const {
  if (d.is_zero()) throw MathError("polynomial division by zero");
  r = *this;
  std::vector<Scalar> qc(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
  const Scalar lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const Scalar f = r.leading() * lead_inv;
    qc[static_cast<std::size_t>(shift)] = f;
    const std::size_t top = r.c_.size() - 1;
    for (std::size_t k = 0; k < d.c_.size(); ++k) r.c_[k + static_cast<std::size_t>(shift)] -= f * d.c_[k];
    // the leading term cancels by construction; drop it even in float mode
    r.c_[top] = Scalar();
    r.trim();
  }
  q = Polynomial(std::move(qc));
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    const bool compound = !c.is_rational();
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) {
      if (!compound && cs[0] == '-') {
        out += " - ";
        cs.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs == "-1") {
      out += "-";
    } else if (cs != "1") {
      out += cs + "*";
    }
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Polynomial q, r;
  (a * b).divmod(gcd(a, b), q, r);
  return q.monic();
}

}  // namespace liegeom
