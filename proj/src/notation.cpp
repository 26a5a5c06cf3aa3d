#include "liegeom/notation.hpp"

#include <cctype>

namespace liegeom {

namespace {

/// Cursor over a string with whitespace skipping and 1-based column reporting
/// relative to `base` (the offset of `text` inside the caller's string).
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base, std::size_t slot) : s_(text), base_(base), slot_(slot) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::size_t column() const { return base_ + pos_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const {
    std::string where = "column " + std::to_string(column());
    if (slot_) where = "slot " + std::to_string(slot_) + ", " + where;
    throw ParseError(msg + " (" + where + ")", column(), slot_);
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }

  /// Everything up to the matching ')' (the '(' already consumed).
  std::string balanced() {
    int depth = 1;
    std::string out;
    while (pos_ < s_.size()) {
      const char c = s_[pos_++];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) return out;
      out += c;
    }
    fail("unbalanced parenthesis");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t base_;
  std::size_t slot_;
};

Scalar parse_coefficient(Cursor& cur) {
  if (cur.accept('(')) {
    const std::string body = cur.balanced();
    try {
      return Scalar::parse(body);
    } catch (const MathError& e) {
      cur.fail(std::string("bad coefficient: ") + e.what());
    }
  }
  mpq_class q = 1;
  bool have_number = false;
  std::string num = cur.digits();
  if (!num.empty()) {
    have_number = true;
    q = mpq_class(mpz_class(num));
    if (cur.accept('/')) {
      const std::string den = cur.digits();
      if (den.empty()) cur.fail("expected denominator");
      if (mpz_class(den) == 0) cur.fail("zero denominator");
      q = mpq_class(mpz_class(num), mpz_class(den));
      q.canonicalize();
    }
  }
  if (cur.accept('r')) {
    const std::string rad = cur.digits();
    if (rad.empty()) cur.fail("expected radicand after 'r'");
    return Scalar(q) * Scalar::sqrt_of(mpq_class(mpz_class(rad)));
  }
  if (!have_number) cur.fail("expected coefficient or basis element");
  return Scalar(q);
}

MultiIndex parse_index(Cursor& cur, std::size_t dim, std::size_t arity, bool bare_digits) {
  MultiIndex idx;
  auto push = [&](const std::string& digits) {
    if (digits.empty()) cur.fail("expected index");
    const unsigned long v = std::stoul(digits);
    if (v < 1 || v > dim) cur.fail("index " + digits + " out of range 1.." + std::to_string(dim));
    idx.push_back(v - 1);
  };
  if (cur.accept('[')) {
    do {
      push(cur.digits());
    } while (cur.accept(','));
    cur.expect(']', "']'");
  } else {
    const std::string ds = cur.digits();
    if (ds.empty()) cur.fail("expected index after 'e'");
    if (arity == 1) {
      push(ds);
    } else {
      if (!bare_digits) cur.fail("bare-digit indices are only allowed in dimension <= 9; use e[i,j]");
      for (char c : ds) push(std::string(1, c));
    }
  }
  if (idx.size() != arity) {
    cur.fail("expected " + std::to_string(arity) + " indices, got " + std::to_string(idx.size()));
  }
  return idx;
}

std::vector<Term> parse_terms_at(std::string_view text, std::size_t base, std::size_t slot, std::size_t dim,
                                 std::size_t arity, bool bare_digits) {
  Cursor cur(text, base, slot);
  std::vector<Term> out;
  if (cur.peek() == '0') {
    // "0" alone is the empty sum; "0*e12" is still a term
    Cursor probe = cur;
    probe.digits();
    if (probe.done()) return out;
  }
  bool first = true;
  while (true) {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Scalar c(1);
    if (cur.peek() != 'e') {
      c = parse_coefficient(cur);
      cur.expect('*', "'*' between coefficient and basis element");
    }
    cur.expect('e', "basis element 'e'");
    MultiIndex idx = parse_index(cur, dim, arity, bare_digits);
    out.push_back({sign > 0 ? c : -c, std::move(idx)});
    if (cur.done()) break;
  }
  return out;
}

std::string index_text(const MultiIndex& idx, std::size_t dim) {
  std::string out = "e";
  if (dim <= 9) {
    for (auto i : idx) out += std::to_string(i + 1);
    return out;
  }
  if (idx.size() == 1) return out + std::to_string(idx[0] + 1);
  out += "[";
  for (std::size_t m = 0; m < idx.size(); ++m) {
    if (m) out += ",";
    out += std::to_string(idx[m] + 1);
  }
  return out + "]";
}

/// Appends "±c*basis" pieces for a scalar coefficient; quadratic values are
/// split into their rational and surd parts.
void append_terms(std::string& out, const Scalar& c, const std::string& basis, const char* plus, const char* minus) {
  auto emit = [&](const mpq_class& q, long radicand) {
    if (sgn(q) == 0) return;
    mpq_class a = abs(q);
    const bool neg = sgn(q) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? minus : plus;
    }
    std::string lit;
    if (radicand) {
      lit = a.get_str() + "r" + std::to_string(radicand);
    } else if (a != 1) {
      lit = a.get_str();
    }
    out += lit.empty() ? basis : lit + "*" + basis;
  };
  if (c.is_float()) throw MathError("cannot print float coefficients in canonical notation");
  emit(c.rational_part(), 0);
  emit(c.irrational_part(), c.radicand());
}

std::string print_sum(const std::vector<std::pair<Scalar, std::string>>& terms, const char* plus, const char* minus) {
  std::string out;
  for (const auto& [c, b] : terms) {
    if (!c.is_zero()) append_terms(out, c, b, plus, minus);
  }
  return out.empty() ? "0" : out;
}

/// Splits on top-level commas (commas inside [] or () do not count), returning
/// (piece, offset) pairs.
std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view s, std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back(s.substr(start, i - start), base + start);
      start = i + 1;
    }
  }
  out.emplace_back(s.substr(start), base + start);
  return out;
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text, std::size_t dim, std::size_t arity, bool bare_digits) {
  return parse_terms_at(text, 0, 0, dim, arity, bare_digits);
}

LieAlgebra parse_algebra(std::string_view text, std::vector<std::string> labels) {
  std::size_t open = text.find_first_not_of(" \t\r\n");
  std::size_t close = text.find_last_not_of(" \t\r\n");
  if (open == std::string_view::npos || text[open] != '(') throw ParseError("algebra must start with '('", open + 1);
  if (text[close] != ')') throw ParseError("algebra must end with ')'", close + 1);
  const auto slots = split_top(text.substr(open + 1, close - open - 1), open + 1);
  const std::size_t dim = slots.size();
  std::vector<KForm> d(dim, KForm(dim, 2));
  for (std::size_t k = 0; k < dim; ++k) {
    const auto& [piece, offset] = slots[k];
    if (piece.find_first_not_of(" \t") == std::string_view::npos) {
      throw ParseError("empty slot (slot " + std::to_string(k + 1) + ")", offset + 1, k + 1);
    }
    for (auto& t : parse_terms_at(piece, offset, k + 1, dim, 2, dim <= 9)) {
      if (t.index[0] == t.index[1]) {
        throw ParseError("repeated index in a 2-form term (slot " + std::to_string(k + 1) + ")", offset + 1, k + 1);
      }
      d[k].add(t.index, t.coeff);
    }
  }
  const LieAlgebra unchecked(d, labels, false);
  if (const auto t = unchecked.jacobi_violation()) {
    // locate the first slot whose differential fails d(d e^k) = 0
    std::size_t bad = t->at(2);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!unchecked.d(d[k]).is_zero()) {
        bad = k;
        break;
      }
    }
    throw ParseError("Jacobi identity fails on basis triple (e" + std::to_string(t->at(0) + 1) + ", e" +
                         std::to_string(t->at(1) + 1) + ", e" + std::to_string(t->at(2) + 1) + "); d(d e^" +
                         std::to_string(bad + 1) + ") != 0 (slot " + std::to_string(bad + 1) + ", column " +
                         std::to_string(slots[bad].second + 1) + ")",
                     slots[bad].second + 1, bad + 1);
  }
  return LieAlgebra(std::move(d), std::move(labels), false);
}

std::string print_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto& idx = multi_indices(n, 2);
  std::string out = "(";
  for (std::size_t k = 0; k < n; ++k) {
    if (k) out += ",";
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t p = 0; p < idx.size(); ++p) terms.emplace_back(g.differentials()[k].coeffs()[p], index_text(idx[p], n));
    out += print_sum(terms, "+", "-");
  }
  return out + ")";
}

Matrix parse_metric(std::string_view text, std::size_t dim) {
  Cursor cur(text, 0, 0);
  Matrix g(dim, dim);
  bool first = true;
  if (cur.done()) throw ParseError("empty metric", 1);
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Scalar c(1);
    if (cur.peek() != 'e') {
      c = parse_coefficient(cur);
      cur.expect('*', "'*' between coefficient and basis element");
    }
    if (sign < 0) c = -c;
    cur.expect('e', "basis element 'e'");
    const std::size_t i = parse_index(cur, dim, 1, true)[0];
    bool symmetric_product = false;
    if (cur.accept('.')) {
      symmetric_product = true;
    } else if (!cur.accept('*')) {
      cur.fail("expected '.' (symmetric product) or '*' (tensor product)");
    }
    cur.expect('e', "basis element 'e'");
    const std::size_t j = parse_index(cur, dim, 1, true)[0];
    g(i, j) += c;
    if (symmetric_product) g(j, i) += c;
  }
  if (!g.is_symmetric()) throw ParseError("metric is not symmetric (add the matching ej*ei term or use ei.ej)");
  return g;
}

std::string print_metric(const Matrix& g) {
  require_square(g, "print_metric");
  if (!g.is_symmetric()) throw MathError("print_metric: matrix is not symmetric");
  const std::size_t n = g.rows();
  std::vector<std::pair<Scalar, std::string>> terms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::string ei = index_text({i}, n), ej = index_text({j}, n);
      terms.emplace_back(g(i, j), i == j ? ei + "*" + ej : ei + "." + ej);
    }
  }
  return print_sum(terms, " + ", " - ");
}

KForm parse_form(std::string_view text, std::size_t dim, std::size_t degree) {
  KForm f(dim, degree);
  for (auto& t : parse_terms(text, dim, degree, dim <= 9)) f.add(t.index, t.coeff);
  return f;
}

std::string print_form(const KForm& f) {
  const auto& idx = multi_indices(f.dim(), f.degree());
  std::vector<std::pair<Scalar, std::string>> terms;
  for (std::size_t p = 0; p < idx.size(); ++p) terms.emplace_back(f.coeffs()[p], index_text(idx[p], f.dim()));
  return print_sum(terms, "+", "-");
}

Vector parse_vector(std::string_view text, std::size_t dim) {
  Vector v(dim);
  for (auto& t : parse_terms(text, dim, 1, true)) v[t.index[0]] += t.coeff;
  return v;
}

std::string print_vector(const Vector& v) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (std::size_t i = 0; i < v.size(); ++i) terms.emplace_back(v[i], index_text({i}, v.size()));
  return print_sum(terms, "+", "-");
}

Matrix parse_endomorphism(std::string_view text, std::size_t dim) {
  Matrix f(dim, dim);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first).starts_with("0") &&
      text.find_first_not_of(" \t\r\n", first + 1) == std::string_view::npos) {
    return f;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      const std::size_t arrow = piece.find("->");
      if (arrow == std::string_view::npos) throw ParseError("expected 'ei -> image'", start + 1);
      Cursor src(piece.substr(0, arrow), start, 0);
      src.expect('e', "basis element 'e'");
      const std::size_t j = parse_index(src, dim, 1, true)[0];
      if (!src.done()) src.fail("unexpected text before '->'");
      for (auto& t : parse_terms_at(piece.substr(arrow + 2), start + arrow + 2, 0, dim, 1, true)) {
        f(t.index[0], j) += t.coeff;
      }
    }
    start = end + 1;
  }
  return f;
}

std::string print_endomorphism(const Matrix& f) {
  require_square(f, "print_endomorphism");
  std::string out;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    const Vector img = f.column(j);
    if (is_zero(img)) continue;
    if (!out.empty()) out += "; ";
    out += index_text({j}, f.rows()) + " -> " + print_vector(img);
  }
  return out.empty() ? "0" : out;
}

}  // namespace liegeom
