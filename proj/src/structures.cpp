#include "liegeom/structures.hpp"

#include <utility>

namespace liegeom {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")";
}

Matrix outer(const Vector& col, const Vector& row) {
  Matrix m(col.size(), row.size());
  for (std::size_t i = 0; i < col.size(); ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = col[i] * row[j];
  }
  return m;
}

/// Coordinates of x in the basis given by the columns of `p_inverse`'s inverse,
/// truncated to the first m entries.
Vector leading_coordinates(const Matrix& p_inverse, const Vector& x, std::size_t m) {
  Vector full = p_inverse * x;
  full.resize(m);
  return full;
}

Matrix change_of_basis_inverse(const std::vector<Vector>& basis, const std::vector<Vector>& kernel) {
  std::vector<Vector> all = basis;
  all.insert(all.end(), kernel.begin(), kernel.end());
  const std::size_t n = all.empty() ? 0 : all.front().size();
  if (all.size() != n) throw StructureError("subspace and kernel do not span the algebra");
  const Matrix p = Matrix::from_columns(all, n);
  if (determinant(p).is_zero()) throw StructureError("subspace and kernel are not complementary");
  return inverse(p);
}

}  // namespace

Vector nijenhuis(const LieAlgebra& g, const Matrix& a, const Vector& x, const Vector& y) {
  const Vector ax = a * x, ay = a * y;
  return a * (a * g.bracket(x, y)) + g.bracket(ax, ay) - a * g.bracket(ax, y) - a * g.bracket(x, ay);
}

std::optional<std::pair<std::size_t, std::size_t>> nijenhuis_violation(const LieAlgebra& g, const Matrix& a) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_zero(nijenhuis(g, a, unit_vector(n, i), unit_vector(n, j)))) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

AlmostContactMetric AlmostContactMetric::from_reeb(MetricLieAlgebra mla, Matrix phi, Vector xi) {
  KForm eta = mla.metric().flat(xi);
  return AlmostContactMetric{std::move(mla), std::move(phi), std::move(xi), std::move(eta)};
}

Matrix AlmostContactMetric::fundamental_matrix() const { return mla.gram() * phi; }

KForm AlmostContactMetric::fundamental_form() const {
  const Matrix m = fundamental_matrix();
  if (m.transpose() != -m) throw StructureError("g(X, phi Y) is not antisymmetric");
  return KForm::from_matrix(m);
}

Verdict check_almost_contact_metric(const AlmostContactMetric& s) {
  Verdict v;
  const std::size_t n = s.mla.dim();
  if (s.phi.rows() != n || s.phi.cols() != n || s.xi.size() != n || s.eta.dim() != n || s.eta.degree() != 1) {
    v.add("shapes", false, "phi, xi, eta do not match the algebra dimension");
    return v;
  }
  const Vector eta = s.eta.as_vector();
  const Matrix& g = s.mla.gram();
  v.add("eta(xi) = 1", dot(eta, s.xi) == Scalar(1), "eta(xi) = " + dot(eta, s.xi).str());
  v.add("eta o phi = 0", is_zero(s.phi.transpose() * eta));
  v.add("phi^2 = -id + eta (x) xi", s.phi * s.phi == -Matrix::identity(n) + outer(s.xi, eta));
  v.add("g(xi, xi) = 1", s.mla.g(s.xi, s.xi) == Scalar(1), "g(xi, xi) = " + s.mla.g(s.xi, s.xi).str());
  v.add("eta = xi flat", g * s.xi == eta);
  v.add("g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)", s.phi.transpose() * g * s.phi == g - outer(eta, eta));
  return v;
}

Verdict check_sasaki(const AlmostContactMetric& s) {
  Verdict v = check_almost_contact_metric(s);
  if (!v.checks.empty() && v.checks.front().name == "shapes") return v;
  const LieAlgebra& alg = s.mla.algebra();
  const std::size_t n = alg.dim();
  const Matrix deta = alg.d(s.eta).matrix();
  const Matrix phi_form = s.fundamental_matrix();

  std::string normal_fail, contact_fail;
  for (std::size_t i = 0; i < n && (normal_fail.empty() || contact_fail.empty()); ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector x = unit_vector(n, i), y = unit_vector(n, j);
      if (normal_fail.empty() && !is_zero(nijenhuis(alg, s.phi, x, y) + deta(i, j) * s.xi)) {
        normal_fail = "fails at " + pair_label(i, j);
      }
      if (contact_fail.empty() && deta(i, j) != Scalar(2) * phi_form(i, j)) {
        contact_fail = "fails at " + pair_label(i, j) + ": d eta = " + deta(i, j).str() +
                       ", 2 Phi = " + (Scalar(2) * phi_form(i, j)).str();
      }
    }
  }
  v.add("N_phi + d eta (x) xi = 0", normal_fail.empty(), normal_fail);
  v.add("d eta = 2 Phi", contact_fail.empty(), contact_fail);
  return v;
}

PseudoKahler PseudoKahler::from_omega(MetricLieAlgebra mla, KForm omega) {
  Matrix j = mla.metric().two_form_to_endo(omega);
  return PseudoKahler{std::move(mla), std::move(j), std::move(omega)};
}

PseudoKahler PseudoKahler::from_J(MetricLieAlgebra mla, Matrix J) {
  const Matrix w = mla.gram() * J;
  if (w.transpose() != -w) throw StructureError("g(X, JY) is not antisymmetric");
  KForm omega = KForm::from_matrix(w);
  return PseudoKahler{std::move(mla), std::move(J), std::move(omega)};
}

Verdict check_pseudo_kahler(const PseudoKahler& s) {
  Verdict v;
  const std::size_t n = s.mla.dim();
  if (s.J.rows() != n || s.J.cols() != n || s.omega.dim() != n || s.omega.degree() != 2) {
    v.add("shapes", false, "J, omega do not match the algebra dimension");
    return v;
  }
  const Matrix& g = s.mla.gram();
  v.add("J^2 = -id", s.J * s.J == -Matrix::identity(n));
  v.add("g(JX, JY) = g(X, Y)", s.J.transpose() * g * s.J == g);
  v.add("omega(X, Y) = g(X, JY)", s.omega.matrix() == g * s.J);
  const auto nj = nijenhuis_violation(s.mla.algebra(), s.J);
  v.add("N_J = 0", !nj, nj ? "fails at " + pair_label(nj->first, nj->second) : "");
  const KForm dw = s.mla.algebra().d(s.omega);
  v.add("d omega = 0", dw.is_zero(), dw.is_zero() ? "" : "d omega = " + dw.str());
  return v;
}

LieAlgebra induced_algebra(const LieAlgebra& g, const std::vector<Vector>& basis, const std::vector<Vector>& kernel) {
  const Matrix pinv = change_of_basis_inverse(basis, kernel);
  const std::size_t m = basis.size();
  std::vector<Scalar> c(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector coords = leading_coordinates(pinv, g.bracket(basis[i], basis[j]), m);
      for (std::size_t k = 0; k < m; ++k) {
        c[(k * m + i) * m + j] = coords[k];
        c[(k * m + j) * m + i] = -coords[k];
      }
    }
  }
  return LieAlgebra::from_structure_constants(m, c);
}

Matrix restricted_gram(const Matrix& gram, const std::vector<Vector>& basis) {
  Matrix out(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Vector gi = gram * basis[i];
    for (std::size_t j = 0; j < basis.size(); ++j) out(i, j) = dot(gi, basis[j]);
  }
  return out;
}

Matrix induced_endomorphism(const Matrix& f, const std::vector<Vector>& basis, const std::vector<Vector>& kernel) {
  const Matrix pinv = change_of_basis_inverse(basis, kernel);
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(leading_coordinates(pinv, f * b, basis.size()));
  return Matrix::from_columns(cols, basis.size());
}

std::vector<Vector> orthogonal_complement(const Matrix& gram, const std::vector<Vector>& vs) {
  const std::size_t n = gram.rows();
  if (vs.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
    return all;
  }
  std::vector<Vector> rows;
  for (const auto& v : vs) rows.push_back(gram * v);
  return nullspace(Matrix::from_rows(rows, n));
}

KahlerQuotient kahler_quotient(const AlmostContactMetric& s) {
  const Verdict sasaki = check_sasaki(s);
  if (!sasaki.ok()) throw StructureError("not Sasaki: " + sasaki.summary());
  const LieAlgebra& alg = s.mla.algebra();
  const auto center = alg.center();
  if (center.empty()) throw StructureError("the center is trivial; the Kähler quotient needs a nonzero center");
  if (center.size() != 1 || !in_span(center, s.xi)) {
    throw StructureError("the center is not spanned by xi (contradicts the Sasaki quotient proposition)");
  }
  KahlerQuotient q;
  q.verdict.add("center = span{xi}", true);
  q.basis = orthogonal_complement(s.mla.gram(), {s.xi});
  const std::vector<Vector> kernel{s.xi};
  const Matrix gram = restricted_gram(s.mla.gram(), q.basis);
  MetricLieAlgebra red(induced_algebra(alg, q.basis, kernel), gram);
  q.reduction = PseudoKahler::from_J(std::move(red), induced_endomorphism(s.phi, q.basis, kernel));
  q.verdict.merge(check_pseudo_kahler(q.reduction), "quotient: ");

  const Matrix basis_matrix = Matrix::from_columns(q.basis, s.mla.dim());
  const Matrix ric_restricted = basis_matrix.transpose() * ricci(s.mla).ric * basis_matrix;
  const Matrix ric_check = ricci(q.reduction.mla).ric;
  q.verdict.add("ric_check = ric + 2 g_check", ric_check == ric_restricted + Scalar(2) * gram);
  return q;
}

StandardDecomposition standard_decomposition_for(const MetricLieAlgebra& m, const Vector& e0) {
  const Scalar c = m.g(e0, e0);
  if (c.is_zero()) throw StructureError("e0 is null; a standard decomposition needs g(e0, e0) = ±1");
  StandardDecomposition dec;
  dec.tau = c.sign();
  dec.e0 = e0;
  if (c.abs() != Scalar(1)) {
    if (!c.is_rational()) throw StructureError("cannot normalize e0: g(e0, e0) is irrational");
    dec.e0 = Scalar::sqrt_of(c.abs().to_rational()).inverse() * e0;
  }
  dec.ideal = orthogonal_complement(m.gram(), {dec.e0});
  dec.D = induced_endomorphism(m.algebra().ad(dec.e0), dec.ideal, {dec.e0});
  return dec;
}

Verdict check_standard_decomposition(const MetricLieAlgebra& m, const StandardDecomposition& dec) {
  Verdict v;
  const LieAlgebra& alg = m.algebra();
  bool orth = true;
  for (const auto& w : dec.ideal) orth = orth && m.g(w, dec.e0).is_zero();
  v.add("e0 orthogonal to the ideal", orth);
  v.add("g(e0, e0) = tau", m.g(dec.e0, dec.e0) == Scalar(dec.tau), "g(e0, e0) = " + m.g(dec.e0, dec.e0).str());
  v.add("ideal has codimension 1", dec.ideal.size() + 1 == m.dim() && span_basis(dec.ideal, m.dim()).size() == dec.ideal.size());
  v.add("ideal is an ideal", alg.is_ideal(dec.ideal));
  v.add("ideal is nilpotent", alg.is_nilpotent_subalgebra(dec.ideal));
  bool d_ok = dec.D.rows() == dec.ideal.size() && dec.D.cols() == dec.ideal.size();
  for (std::size_t k = 0; d_ok && k < dec.ideal.size(); ++k) {
    Vector expected = zero_vector(m.dim());
    for (std::size_t j = 0; j < dec.ideal.size(); ++j) expected = expected + dec.D(j, k) * dec.ideal[j];
    d_ok = alg.bracket(dec.e0, dec.ideal[k]) == expected;
  }
  v.add("D = ad e0 on the ideal", d_ok);
  return v;
}

std::vector<StandardDecomposition> find_standard_decompositions(const MetricLieAlgebra& m) {
  const LieAlgebra& alg = m.algebra();
  const auto derived = alg.bracket_span(alg.basis(), alg.basis());
  std::vector<StandardDecomposition> out;
  for (const auto& cand : orthogonal_complement(m.gram(), derived)) {
    const Scalar c = m.g(cand, cand);
    if (c.is_zero() || !c.is_rational()) continue;
    StandardDecomposition dec = standard_decomposition_for(m, cand);
    if (alg.is_ideal(dec.ideal) && alg.is_nilpotent_subalgebra(dec.ideal)) out.push_back(std::move(dec));
  }
  return out;
}

Verdict check_z_standard(const AlmostContactMetric& s, const StandardDecomposition& dec) {
  Verdict v = check_standard_decomposition(s.mla, dec);
  const Vector pe0 = s.phi * dec.e0;
  const bool inside = in_span(dec.ideal, pe0);
  v.add("phi(e0) in the ideal", inside, "phi(e0) = " + to_string(pe0));
  bool central = inside;
  for (const auto& w : dec.ideal) central = central && is_zero(s.mla.algebra().bracket(pe0, w));
  v.add("phi(e0) central in the ideal", central);
  return v;
}

bool is_pseudo_iwasawa(const MetricLieAlgebra& m, const StandardDecomposition& dec) {
  return m.metric().is_self_adjoint(m.algebra().ad(dec.e0));
}

std::string to_string(HKind k) {
  switch (k) {
    case HKind::gl:
      return "gl";
    case HKind::co:
      return "co";
    case HKind::cu:
      return "cu";
  }
  return "?";
}

HKind parse_hkind(const std::string& s) {
  if (s == "gl") return HKind::gl;
  if (s == "co") return HKind::co;
  if (s == "cu") return HKind::cu;
  throw MathError("unknown constraint algebra '" + s + "' (expected gl, co or cu)");
}

Verdict check_aw_hypotheses(const MetricLieAlgebra& m, const StandardDecomposition& dec, const Matrix& chi, HKind kind,
                            const std::optional<Matrix>& J) {
  Verdict v;
  const std::size_t n = m.dim(), k = dec.ideal.size();
  if (chi.rows() != k || chi.cols() != k) {
    v.add("shapes", false, "chi must act on the ideal");
    return v;
  }
  const LieAlgebra ideal_alg = induced_algebra(m.algebra(), dec.ideal, {dec.e0});
  v.add("chi is a derivation of the ideal", ideal_alg.is_derivation(chi));

  // χ extended by zero on e0, in ambient coordinates
  std::vector<Vector> cols = dec.ideal;
  cols.push_back(dec.e0);
  const Matrix p = Matrix::from_columns(cols, n);
  Matrix block(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) block(i, j) = chi(i, j);
  }
  const Matrix chi_full = p * block * inverse(p);
  const Matrix ad0 = m.algebra().ad(dec.e0);
  const Matrix diff = chi_full - ad0;
  switch (kind) {
    case HKind::gl:
      v.add("chi - ad e0 in h", true, "h = gl imposes no constraint");
      break;
    case HKind::co:
      v.add("chi - ad e0 in h", m.metric().is_skew_adjoint(diff), "h = so: difference must be skew-adjoint");
      break;
    case HKind::cu: {
      if (!J) throw MathError("cu constraints need the complex structure");
      const bool ok = m.metric().is_skew_adjoint(diff) && commutator(diff, *J).is_zero();
      v.add("chi - ad e0 in h", ok, "h = u: difference must be skew-adjoint and commute with J");
      break;
    }
  }
  v.add("[chi, ad e0] = 0", commutator(chi_full, ad0).is_zero());
  return v;
}

}  // namespace liegeom
