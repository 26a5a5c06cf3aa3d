#include "liegeom/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace liegeom {

namespace {

double g_float_tolerance = 1e-9;

std::string rational_str(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw MathError("empty rational literal");
  std::string s(text);
  mpq_class q;
  // mpq_class::set_str accepts "a/b" and plain integers; reject anything else first
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+')) {
      throw MathError("malformed rational literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  if (q.set_str(s, 10) != 0) throw MathError("malformed rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0) throw MathError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

double Scalar::float_tolerance() { return g_float_tolerance; }
void Scalar::set_float_tolerance(double tol) { g_float_tolerance = tol; }

void squarefree_split(const mpz_class& n, mpz_class& s, mpz_class& m) {
  if (sgn(n) <= 0) throw MathError("squarefree_split needs a positive integer");
  s = 1;
  m = 1;
  mpz_class rest = n;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) m *= p;
  }
  m *= rest;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw MathError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::quadratic(const mpq_class& a, const mpq_class& b, long d) {
  if (d <= 1) throw MathError("quadratic radicand must be > 1");
  mpz_class s, m;
  squarefree_split(mpz_class(d), s, m);
  if (s != 1) throw MathError("quadratic radicand must be squarefree");
  Scalar r;
  r.a_ = a;
  r.b_ = b;
  r.a_.canonicalize();
  r.b_.canonicalize();
  r.d_ = d;
  return r;
}

Scalar Scalar::sqrt_of(const mpq_class& q) {
  if (sgn(q) < 0) throw MathError("square root of a negative rational");
  if (sgn(q) == 0) return Scalar();
  // sqrt(p/r) = sqrt(p*r)/r
  mpz_class pr = q.get_num() * q.get_den();
  mpz_class s, m;
  squarefree_split(pr, s, m);
  mpq_class coef(s, q.get_den());
  coef.canonicalize();
  if (m == 1) return Scalar(coef);
  if (!m.fits_slong_p()) throw MathError("radicand too large");
  return quadratic(0, coef, m.get_si());
}

Scalar Scalar::from_double(double v) {
  Scalar r;
  r.float_ = true;
  r.f_ = v;
  return r;
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw MathError("value " + str() + " is not rational");
  return a_;
}

double Scalar::to_double() const {
  if (float_) return f_;
  double v = a_.get_d();
  if (d_ != 0 && sgn(b_) != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

bool Scalar::is_zero() const {
  if (float_) return std::fabs(f_) <= g_float_tolerance;
  return sgn(a_) == 0 && sgn(b_) == 0;
}

int Scalar::sign() const {
  if (float_) return is_zero() ? 0 : (f_ > 0 ? 1 : -1);
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // impossible for squarefree d > 1, kept for safety
  return c > 0 ? sa : sb;
}

void Scalar::require_compatible(const Scalar& o) const {
  if (d_ != 0 && o.d_ != 0 && d_ != o.d_) {
    throw MathError("mixing Q(sqrt(" + std::to_string(d_) + ")) with Q(sqrt(" +
                    std::to_string(o.d_) + "))");
  }
}

void Scalar::merge_tag(const Scalar& o) {
  if (d_ == 0) d_ = o.d_;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (float_) {
    r.f_ = -f_;
  } else {
    r.a_ = -a_;
    r.b_ = -b_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (float_ || o.float_) {
    double v = to_double() + o.to_double();
    *this = from_double(v);
    return *this;
  }
  require_compatible(o);
  a_ += o.a_;
  b_ += o.b_;
  merge_tag(o);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (float_ || o.float_) {
    double v = to_double() * o.to_double();
    *this = from_double(v);
    return *this;
  }
  require_compatible(o);
  long d = d_ != 0 ? d_ : o.d_;
  mpq_class na = a_ * o.a_ + b_ * o.b_ * d;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  d_ = d;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (float_) return from_double(1.0 / f_);
  Scalar r(*this);
  if (sgn(b_) == 0) {
    r.a_ = 1 / a_;
    return r;
  }
  mpq_class norm = a_ * a_ - b_ * b_ * d_;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.float_ || y.float_) return std::fabs(x.to_double() - y.to_double()) <= g_float_tolerance;
  if (x.a_ != y.a_) return false;
  if (sgn(x.b_) == 0 && sgn(y.b_) == 0) return true;
  return x.d_ == y.d_ && x.b_ == y.b_;
}

std::string Scalar::str() const {
  if (float_) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17gf", f_);
    return buf;
  }
  if (sgn(b_) == 0) return rational_str(a_);
  std::string out;
  if (sgn(a_) != 0) out = rational_str(a_);
  mpq_class b = b_;
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (sgn(b) < 0) {
    out += "-";
    b = -b;
  } else if (!out.empty()) {
    out += "+";
  }
  if (b == 1) {
    out += root;
  } else {
    out += rational_str(b) + "*" + root;
  }
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw MathError("empty scalar literal");
  if (s.back() == 'f') {
    const std::string body = s.substr(0, s.size() - 1);
    char* end = nullptr;
    double v = std::strtod(body.c_str(), &end);
    if (body.empty() || end != body.c_str() + body.size()) {
      throw MathError("malformed float literal '" + s + "'");
    }
    return from_double(v);
  }
  const auto root_pos = s.find("sqrt(");
  if (root_pos == std::string::npos) return Scalar(parse_rational(s));

  // [a(+|-)][b*]sqrt(d)
  if (s.back() != ')') throw MathError("malformed quadratic literal '" + s + "'");
  const std::string dtext = s.substr(root_pos + 5, s.size() - root_pos - 6);
  long d = 0;
  try {
    d = std::stol(dtext);
  } catch (const std::exception&) {
    throw MathError("malformed radicand in '" + s + "'");
  }
  std::string head = s.substr(0, root_pos);
  mpq_class b = 1;
  if (!head.empty() && head.back() == '*') {
    head.pop_back();
    // coefficient runs back to the last sign that is not the first character
    std::size_t cut = head.find_last_of("+-");
    if (cut == std::string::npos) cut = 0;
    b = parse_rational(head.substr(cut));
    head = head.substr(0, cut);
  } else if (!head.empty() && (head.back() == '-' || head.back() == '+')) {
    if (head.back() == '-') b = -1;
    head.pop_back();
  }
  mpq_class a = head.empty() ? mpq_class(0) : parse_rational(head);
  return quadratic(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace liegeom
