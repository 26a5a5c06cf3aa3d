#include "liegeom/extensions.hpp"

#include <utility>

namespace liegeom {

namespace {

/// The 2-form Ďω(x, y) = −ω(Ďx, y) − ω(x, Ďy).
KForm derivation_action(const Matrix& d, const KForm& omega) {
  const Matrix w = omega.matrix();
  return KForm::from_matrix(-(d.transpose() * w + w * d));
}

Matrix embed_block(const Matrix& a, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  return out;
}

void require_symmetric_part_identity(const MetricLieAlgebra& m, const Matrix& d) {
  if (m.symmetric_part(d) != Matrix::identity(m.dim())) {
    throw StructureError("no derivation with symmetric part id: the given Dcheck has Dcheck^s != id");
  }
}

}  // namespace

MetricLieAlgebra central_extension(const MetricLieAlgebra& base, const std::vector<CentralCocycle>& specs) {
  const std::size_t n = base.dim();
  const std::size_t total = n + specs.size();
  std::vector<KForm> d;
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  for (const auto& f : base.algebra().differentials()) d.push_back(embed_form(f, total, map));
  Matrix gram = embed_block(base.gram(), total);
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const auto& spec = specs[s];
    if (spec.sigma.dim() != n || spec.sigma.degree() != 2) throw StructureError("cocycle has the wrong shape");
    if (!base.algebra().d(spec.sigma).is_zero()) {
      throw StructureError("cocycle " + std::to_string(s + 1) + " is not closed");
    }
    if (spec.epsilon != 1 && spec.epsilon != -1) throw StructureError("epsilon must be +1 or -1");
    d.push_back(embed_form(spec.sigma, total, map));
    gram(n + s, n + s) = Scalar(spec.epsilon);
  }
  return MetricLieAlgebra(LieAlgebra(std::move(d)), std::move(gram));
}

StandardExtension standard_extension(const MetricLieAlgebra& base, const Matrix& d, int tau) {
  const std::size_t n = base.dim();
  if (d.rows() != n || d.cols() != n) throw StructureError("D has the wrong size");
  if (!base.algebra().is_derivation(d)) throw StructureError("D is not a derivation");
  if (tau != 1 && tau != -1) throw StructureError("tau must be +1 or -1");
  std::vector<KForm> forms;
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    KForm f = embed_form(base.algebra().differentials()[k], n + 1, map);
    // de^k(e0, e_j) = −e^k([e0, e_j]) = −D(k, j)
    for (std::size_t j = 0; j < n; ++j) {
      if (!d(k, j).is_zero()) f.add({n, j}, -d(k, j));
    }
    forms.push_back(std::move(f));
  }
  forms.emplace_back(n + 1, 2);
  Matrix gram = embed_block(base.gram(), n + 1);
  gram(n, n) = Scalar(tau);
  StandardExtension ext;
  ext.total = MetricLieAlgebra(LieAlgebra(std::move(forms)), std::move(gram));
  ext.dec.e0 = unit_vector(n + 1, n);
  ext.dec.tau = tau;
  for (std::size_t i = 0; i < n; ++i) ext.dec.ideal.push_back(unit_vector(n + 1, i));
  ext.dec.D = d;
  return ext;
}

NilsolitonReport check_generalized_nilsoliton(const MetricLieAlgebra& base, const Matrix& d, int tau) {
  NilsolitonReport r;
  const std::size_t n = base.dim();
  const Matrix ds = base.symmetric_part(d);
  const Matrix dstar = base.adjoint(d);
  const Scalar tr = d.trace();
  const Scalar trds2 = (ds * ds).trace();
  const Matrix rhs =
      Scalar(tau) * (-trds2 * Matrix::identity(n) - Scalar::rational(1, 2) * (d * dstar - dstar * d) + tr * ds);
  const Matrix ric = ricci(base).op;
  r.equation = ric == rhs;
  r.verdict.add("D is a derivation", base.algebra().is_derivation(d));
  r.verdict.add("Ric = tau(-Tr((D^s)^2) id - 1/2[D, D*] + (Tr D) D^s)", r.equation,
                r.equation ? "" : "Ric - rhs = " + (ric - rhs).str());
  r.trace_condition = true;
  for (std::size_t i = 0; i < n && r.trace_condition; ++i) {
    r.trace_condition = (base.algebra().ad_basis(i) * dstar).trace().is_zero();
  }
  r.trace_not_eigenvalue = !determinant(d + tr * Matrix::identity(n)).is_zero();
  r.lambda = -Scalar(tau) * trds2;
  r.route = r.trace_condition ? "trace-condition" : (r.trace_not_eigenvalue ? "trace-not-eigenvalue" : "none");
  r.verdict.add("Tr(ad v o D*) = 0 or -Tr D not an eigenvalue of D", r.trace_condition || r.trace_not_eigenvalue,
                "route: " + r.route);
  return r;
}

Verdict check_z_standard_data(const ZStandardData& data) {
  Verdict v;
  const auto& red = data.reduction;
  const LieAlgebra& alg = red.mla.algebra();
  const std::size_t m = red.mla.dim();
  v.add("tau = +-1", data.tau == 1 || data.tau == -1);
  v.merge(check_pseudo_kahler(red), "reduction: ");
  v.add("reduction is nilpotent", structural_report(alg).nilpotent);
  const Matrix& dc = data.Dcheck;
  if (dc.rows() != m || dc.cols() != m) {
    v.add("Dcheck has the right size", false);
    return v;
  }
  v.add("Dcheck is a derivation", alg.is_derivation(dc));
  v.add("[Dcheck, J] = 0", dc * red.J == red.J * dc);
  v.add("d(Dcheck omega) = 0", alg.d(derivation_action(dc, red.omega)).is_zero());
  const Matrix s = red.mla.symmetric_part(dc);
  const Matrix a = red.mla.skew_part(dc);
  v.add("[Dcheck^s, Dcheck^a] = h Dcheck^s - 2 (Dcheck^s)^2", s * a - a * s == data.h * s - Scalar(2) * (s * s));
  return v;
}

AlmostContactMetric z_standard_structure(const MetricLieAlgebra& m, const Matrix& Jcheck) {
  const std::size_t n = m.dim();
  if (n < 3 || Jcheck.rows() + 3 != n) throw StructureError("expected the basis order (gcheck..., b, xi, e0)");
  const std::size_t bi = n - 3, xi = n - 2, e0 = n - 1;
  const Vector b = unit_vector(n, bi);
  const Scalar tau = m.g(unit_vector(n, e0), unit_vector(n, e0));
  Matrix phi(n, n);
  for (std::size_t j = 0; j < bi; ++j) {
    for (std::size_t i = 0; i < bi; ++i) phi(i, j) = Jcheck(i, j);
  }
  for (std::size_t j = 0; j < e0; ++j) phi(e0, j) += tau * m.g(b, unit_vector(n, j));
  phi(bi, e0) = Scalar(-1);
  return AlmostContactMetric::from_reeb(m, std::move(phi), unit_vector(n, xi));
}

ZStandardSasaki build_z_standard_sasaki(const ZStandardData& data) {
  const Verdict pre = check_z_standard_data(data);
  if (!pre.ok()) {
    std::string msg = "z-standard hypotheses fail:";
    for (const auto& c : pre.checks) {
      if (!c.passed) msg += " [" + c.name + "]";
    }
    throw StructureError(msg);
  }
  const auto& red = data.reduction;
  const std::size_t m = red.mla.dim();
  const MetricLieAlgebra g = central_extension(
      red.mla, {CentralCocycle{data.tau, Scalar(data.tau) * derivation_action(data.Dcheck, red.omega)},
                CentralCocycle{1, Scalar(2) * red.omega}});
  Matrix dfull = embed_block(data.Dcheck, m + 2);
  dfull(m, m) = data.h;
  dfull(m + 1, m) = Scalar(-2 * data.tau);
  StandardExtension ext = standard_extension(g, dfull, data.tau);
  ZStandardSasaki out;
  out.b = m;
  out.xi = m + 1;
  out.e0 = m + 2;
  out.structure = z_standard_structure(ext.total, red.J);
  out.dec = std::move(ext.dec);
  return out;
}

ZStandardSasaki build_sasaki_einstein(const PseudoKahler& reduction, const Matrix& Dcheck) {
  require_symmetric_part_identity(reduction.mla, Dcheck);
  return build_z_standard_sasaki(ZStandardData{reduction, Dcheck, -1, Scalar(2)});
}

KahlerEinsteinExtension build_kahler_einstein(const PseudoKahler& reduction, const Matrix& Dcheck) {
  require_symmetric_part_identity(reduction.mla, Dcheck);
  const Verdict pre = check_z_standard_data(ZStandardData{reduction, Dcheck, -1, Scalar(2)});
  if (!pre.ok()) throw StructureError("Kähler-Einstein hypotheses fail: " + pre.summary());
  const std::size_t m = reduction.mla.dim();
  const MetricLieAlgebra g = central_extension(reduction.mla, {CentralCocycle{-1, Scalar(2) * reduction.omega}});
  Matrix dfull = embed_block(Dcheck, m + 1);
  dfull(m, m) = Scalar(2);
  StandardExtension ext = standard_extension(g, dfull, -1);
  const std::size_t n = m + 2;
  Matrix J(n, n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) J(i, j) = reduction.J(i, j);
  }
  // J̃(b) = −g(b, b) e0 = e0, J̃(e0) = −b
  J(m + 1, m) = Scalar(1);
  J(m, m + 1) = Scalar(-1);
  KahlerEinsteinExtension out{PseudoKahler::from_J(ext.total, std::move(J)), std::move(ext.dec)};
  return out;
}

KahlerReduction kahler_reduction(const AlmostContactMetric& s, const StandardDecomposition& dec) {
  const Verdict sas = check_sasaki(s);
  if (!sas.ok()) throw StructureError("not Sasaki: " + sas.summary());
  const Verdict zs = check_z_standard(s, dec);
  if (!zs.ok()) throw StructureError("not z-standard: " + zs.summary());
  const MetricLieAlgebra& m = s.mla;
  const LieAlgebra& alg = m.algebra();
  KahlerReduction r;
  r.e0 = dec.e0;
  r.xi = s.xi;
  r.b = -(s.phi * dec.e0);
  const Scalar tau(dec.tau);
  if (m.g(r.b, r.b) != tau) throw StructureError("g(b, b) != tau");
  const std::vector<Vector> kernel{r.b, r.xi, r.e0};
  r.basis = orthogonal_complement(m.gram(), kernel);
  MetricLieAlgebra red(induced_algebra(alg, r.basis, kernel), restricted_gram(m.gram(), r.basis));
  r.data.reduction = PseudoKahler::from_J(std::move(red), induced_endomorphism(s.phi, r.basis, kernel));
  r.data.Dcheck = induced_endomorphism(alg.ad(r.e0), r.basis, kernel);
  r.data.tau = dec.tau;
  const Vector e0b = alg.bracket(r.e0, r.b);
  r.data.h = m.g(e0b, r.b) / tau;
  if (e0b != r.data.h * r.b - Scalar(2) * tau * r.xi) {
    throw StructureError("[e0, b] is not of the form h b - 2 tau xi: " + to_string(e0b));
  }
  return r;
}

std::optional<NikolayevskyEinstein> einstein_extension_with_nikolayevsky(const MetricLieAlgebra& base) {
  if (!is_ricci_flat(base)) throw StructureError("the base metric is not Ricci-flat");
  const auto res = nikolayevsky_derivation(constrained_derivations(base, HKind::co));
  const Matrix n = res.N ? *res.N : res.particular;
  if (n.is_zero() || n.trace().is_zero()) return std::nullopt;
  NikolayevskyEinstein out;
  out.N = n;
  out.D = (Scalar(static_cast<long>(base.dim())) / n.trace()) * n;
  out.extension = standard_extension(base, out.D, 1);
  out.lambda = -Scalar(static_cast<long>(base.dim()));
  return out;
}

}  // namespace liegeom
