#include "liegeom/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <utility>

#include "liegeom/notation.hpp"

namespace liegeom {

// Defined in the generated catalog_data.cpp: (file name, file text) pairs.
const std::vector<std::pair<std::string, std::string>>& embedded_catalog_files();

// ---------------------------------------------------------------------------
// placeholder expressions

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view s, const std::map<std::string, Scalar>& vars) : s_(s), vars_(vars) {}

  Scalar parse() {
    Scalar v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw MathError("expression '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar sum() {
    Scalar v = product();
    while (true) {
      if (accept('+')) {
        v = v + product();
      } else if (accept('-')) {
        v = v - product();
      } else {
        return v;
      }
    }
  }
  Scalar product() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }
  Scalar primary() {
    skip();
    if (accept('(')) {
      Scalar v = sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == "sqrt") {
        if (!accept('(')) fail("expected '(' after sqrt");
        const Scalar arg = sum();
        if (!accept(')')) fail("expected ')'");
        if (!arg.is_rational() || arg.sign() < 0) fail("sqrt needs a nonnegative rational argument");
        return Scalar::sqrt_of(arg.to_rational());
      }
      const auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown parameter '" + name + "'");
      return it->second;
    }
    fail("expected a number, parameter or '('");
  }

  std::string_view s_;
  const std::map<std::string, Scalar>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar evaluate_expression(std::string_view expr, const std::map<std::string, Scalar>& vars) {
  return ExpressionParser(expr, vars).parse();
}

std::string substitute_placeholders(std::string_view text, const std::map<std::string, Scalar>& vars) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t open = text.find('{', pos);
    if (open == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    const std::size_t close = text.find('}', open);
    if (close == std::string_view::npos) throw MathError("unterminated placeholder in '" + std::string(text) + "'");
    out.append(text.substr(pos, open - pos));
    out += "(" + evaluate_expression(text.substr(open + 1, close - open - 1), vars).str() + ")";
    pos = close + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// catalog entries and samples

namespace {

Scalar scalar_from_json(const Json& v) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return Scalar::parse(s);
  }
  throw MathError("expected a scalar, got " + v.dump());
}

bool bool_from_json(const Json& v) {
  if (v.is_boolean()) return v.get<bool>();
  return !scalar_from_json(v).is_zero();
}

std::vector<Scalar> default_grid() {
  return {Scalar(-1), Scalar(0), Scalar::rational(1, 2), Scalar(1), Scalar(2)};
}

std::string sample_label(const std::vector<std::pair<std::string, Scalar>>& ordered) {
  std::string out;
  for (const auto& [k, v] : ordered) {
    if (!out.empty()) out += ",";
    out += k + "=" + v.str();
  }
  return out;
}

Json substitute_json(const Json& j, const std::map<std::string, Scalar>& vars) {
  if (j.is_string()) return substitute_placeholders(j.get<std::string>(), vars);
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& e : j) out.push_back(substitute_json(e, vars));
    return out;
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      // parameter declarations and claim names stay verbatim
      if (it.key() == "params" || it.key() == "samples") {
        out[it.key()] = it.value();
      } else {
        out[it.key()] = substitute_json(it.value(), vars);
      }
    }
    return out;
  }
  return j;
}

}  // namespace

std::vector<std::string> CatalogEntry::parameter_names() const {
  std::vector<std::string> names;
  if (data.contains("samples")) {
    for (const auto& s : data["samples"]) {
      for (auto it = s.begin(); it != s.end(); ++it) {
        if (std::find(names.begin(), names.end(), it.key()) == names.end()) names.push_back(it.key());
      }
    }
  }
  if (data.contains("params")) {
    for (auto it = data["params"].begin(); it != data["params"].end(); ++it) names.push_back(it.key());
  }
  return names;
}

std::vector<ParameterSample> CatalogEntry::samples(const std::map<std::string, Scalar>& overrides) const {
  const auto names = parameter_names();
  for (const auto& [k, v] : overrides) {
    if (std::find(names.begin(), names.end(), k) == names.end()) {
      throw CatalogError("entry '" + id + "' has no parameter '" + k + "'");
    }
  }
  using Assignment = std::vector<std::pair<std::string, Scalar>>;
  std::vector<Assignment> current;
  if (data.contains("samples")) {
    for (const auto& s : data["samples"]) {
      Assignment a;
      bool keep = true;
      for (auto it = s.begin(); it != s.end(); ++it) {
        const Scalar v = scalar_from_json(it.value());
        const auto o = overrides.find(it.key());
        if (o != overrides.end() && o->second != v) keep = false;
        a.emplace_back(it.key(), v);
      }
      if (keep) current.push_back(std::move(a));
    }
  } else {
    current.emplace_back();
  }
  if (data.contains("params")) {
    for (auto it = data["params"].begin(); it != data["params"].end(); ++it) {
      const Json& spec = it.value();
      std::vector<Scalar> values;
      const auto o = overrides.find(it.key());
      if (o != overrides.end()) {
        values = {o->second};
      } else if (spec.is_array()) {
        for (const auto& v : spec) values.push_back(scalar_from_json(v));
      } else {
        values = spec.contains("grid") ? std::vector<Scalar>{} : default_grid();
        if (spec.contains("grid")) {
          for (const auto& v : spec["grid"]) values.push_back(scalar_from_json(v));
        }
        if (spec.contains("exclude")) {
          for (const auto& ex : spec["exclude"]) {
            const Scalar e = scalar_from_json(ex);
            values.erase(std::remove(values.begin(), values.end(), e), values.end());
          }
        }
      }
      std::vector<Assignment> next;
      for (const auto& a : current) {
        for (const auto& v : values) {
          Assignment b = a;
          b.emplace_back(it.key(), v);
          next.push_back(std::move(b));
        }
      }
      current = std::move(next);
    }
  }
  std::vector<ParameterSample> out;
  for (const auto& a : current) {
    ParameterSample s;
    for (const auto& [k, v] : a) s.values[k] = v;
    s.label = sample_label(a);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CatalogEntry> parse_catalog_file(const std::string& name, const std::string& text) {
  Json arr;
  try {
    arr = Json::parse(text);
  } catch (const std::exception& e) {
    throw CatalogError("catalog file '" + name + "' is not valid JSON: " + e.what());
  }
  if (!arr.is_array()) throw CatalogError("catalog file '" + name + "' must hold a JSON array");
  std::vector<CatalogEntry> out;
  for (const auto& e : arr) {
    if (!e.contains("id") || !e.contains("algebra")) {
      throw CatalogError("catalog file '" + name + "': every entry needs 'id' and 'algebra'");
    }
    CatalogEntry entry;
    entry.id = e["id"].get<std::string>();
    entry.source = e.value("source", "");
    entry.file = name;
    entry.data = e;
    out.push_back(std::move(entry));
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> all;
    for (const auto& [name, text] : embedded_catalog_files()) {
      auto part = parse_catalog_file(name, text);
      all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < all.size(); ++i) {
      if (all[i].id == all[i - 1].id) throw CatalogError("duplicate catalog id '" + all[i].id + "'");
    }
    return all;
  }();
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

CatalogInstance instantiate(const CatalogEntry& entry, const ParameterSample& sample) {
  CatalogInstance inst;
  inst.id = entry.id;
  inst.sample = sample.label;
  inst.data = substitute_json(entry.data, sample.values);
  const Json& d = inst.data;
  LieAlgebra alg = parse_algebra(d["algebra"].get<std::string>());
  const std::size_t n = alg.dim();
  if (d.contains("structure") && d["structure"].value("kind", "") == "pseudo_kahler") {
    Json pk = d["structure"];
    pk["algebra"] = d["algebra"];
    if (d.contains("metric")) pk["metric"] = d["metric"];
    pk.erase("kind");
    inst.pseudo_kahler = pseudo_kahler_from_json(pk);
    inst.mla = inst.pseudo_kahler->mla;
    return inst;
  }
  if (!d.contains("metric")) throw CatalogError("entry '" + entry.id + "' has no metric");
  inst.mla = MetricLieAlgebra(std::move(alg), parse_metric(d["metric"].get<std::string>(), n));
  if (d.contains("structure")) {
    const Json& s = d["structure"];
    if (s.value("kind", "") != "sasaki") throw CatalogError("entry '" + entry.id + "': unknown structure kind");
    if (s.contains("Jcheck")) {
      const std::string jtext = s["Jcheck"].get<std::string>();
      const Matrix J = n == 3 ? Matrix(0, 0) : parse_endomorphism(jtext, n - 3);
      inst.sasaki = z_standard_structure(inst.mla, J);
    } else {
      inst.sasaki = AlmostContactMetric::from_reeb(inst.mla, parse_endomorphism(s["phi"].get<std::string>(), n),
                                                   parse_vector(s["xi"].get<std::string>(), n));
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------
// claim evaluation

namespace {

struct Context {
  const CatalogInstance& inst;
  const Json& claim;
  std::string name;
  std::string tag;
  std::vector<ClaimResult>* out;

  void add(const std::string& sub, bool passed, std::string detail = {}) const {
    out->push_back({inst.id, inst.sample, sub.empty() ? name : name + "/" + sub, tag, passed, std::move(detail)});
  }
  std::string str(const char* key) const {
    if (!claim.contains(key)) throw CatalogError("claim '" + name + "' needs '" + key + "'");
    return claim[key].get<std::string>();
  }
  bool has(const char* key) const { return claim.contains(key); }
  bool expect_bool(bool dflt = true) const { return claim.contains("expect") ? bool_from_json(claim["expect"]) : dflt; }
  const MetricLieAlgebra& mla() const { return inst.mla; }
  std::size_t dim() const { return inst.mla.dim(); }
  const AlmostContactMetric& sasaki() const {
    if (!inst.sasaki) throw CatalogError("claim '" + name + "' needs a Sasaki structure");
    return *inst.sasaki;
  }
  const PseudoKahler& pk() const {
    if (!inst.pseudo_kahler) throw CatalogError("claim '" + name + "' needs a pseudo-Kähler structure");
    return *inst.pseudo_kahler;
  }
  Matrix endo(const char* key, std::size_t n) const {
    const std::string t = str(key);
    if (t == "id") return Matrix::identity(n);
    return parse_endomorphism(t, n);
  }
  StandardDecomposition decomposition() const {
    const Vector e0 = has("e0") ? parse_vector(str("e0"), dim()) : unit_vector(dim(), dim() - 1);
    return standard_decomposition_for(mla(), e0);
  }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string compare_detail(const std::string& got, const std::string& want) {
  return got == want ? "" : "got " + got + ", expected " + want;
}

void check_bool(const Context& c, const std::string& sub, bool got, bool want, const std::string& extra = {}) {
  std::string detail = got == want ? extra : "got " + yes_no(got) + ", expected " + yes_no(want);
  if (got != want && !extra.empty()) detail += " (" + extra + ")";
  c.add(sub, got == want, detail);
}

void check_einstein_value(const Context& c, const std::string& sub, const MetricLieAlgebra& m, const Json& expect) {
  const auto e = is_einstein(m);
  if (expect.is_boolean() && !expect.get<bool>()) {
    c.add(sub, !e, e ? "Einstein with lambda = " + e->str() : "");
    return;
  }
  const Scalar want = scalar_from_json(expect);
  c.add(sub, e && *e == want, e ? compare_detail(e->str(), want.str()) : "not Einstein");
}

bool same_algebra_text(const LieAlgebra& g, const std::string& text) {
  return print_algebra(g) == print_algebra(parse_algebra(text));
}

void compare_algebra(const Context& c, const std::string& sub, const MetricLieAlgebra& m, const char* alg_key,
                     const char* metric_key) {
  if (c.has(alg_key)) {
    const std::string want = print_algebra(parse_algebra(c.str(alg_key)));
    c.add(sub + " algebra", print_algebra(m.algebra()) == want, compare_detail(print_algebra(m.algebra()), want));
  }
  if (c.has(metric_key)) {
    const Matrix want = parse_metric(c.str(metric_key), m.dim());
    c.add(sub + " metric", m.gram() == want, compare_detail(print_metric(m.gram()), print_metric(want)));
  }
}

bool is_abelian(const LieAlgebra& g) {
  for (const auto& f : g.differentials()) {
    if (!f.is_zero()) return false;
  }
  return true;
}

/// Lemma Riccig prediction for the Ricci operator of 𝔤 = ǧ ⊕ span{b, ξ}.
Matrix riccig_prediction(const PseudoKahler& seed, const Matrix& dcheck, int tau) {
  const std::size_t m = seed.mla.dim();
  const Matrix ds = seed.mla.symmetric_part(dcheck);
  const Matrix block = Scalar(-2) * (Scalar(tau) * (ds * ds) + Matrix::identity(m));
  Matrix out(m + 2, m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = block(i, j);
  }
  const Scalar tr = dcheck.trace();
  out(m, m) = Scalar(tau) * (ds * ds).trace();
  out(m + 1, m) = -tr;
  out(m + 1, m + 1) = Scalar(static_cast<long>(m));  // 2n − 2 with 2n = m + 2
  out(m, m + 1) = -Scalar(tau) * tr;
  return out;
}

MetricLieAlgebra lemma_g(const PseudoKahler& seed, const Matrix& dcheck, int tau) {
  const Matrix w = seed.omega.matrix();
  const KForm domega = KForm::from_matrix(-(dcheck.transpose() * w + w * dcheck));
  return central_extension(seed.mla, {CentralCocycle{tau, Scalar(tau) * domega}, CentralCocycle{1, Scalar(2) * seed.omega}});
}

void claim_nilpotent(const Context& c) {
  check_bool(c, "", structural_report(c.mla().algebra()).nilpotent, c.expect_bool());
}

void claim_ricci_operator(const Context& c) {
  const Matrix got = ricci(c.mla()).op;
  const Matrix want = parse_endomorphism(c.str("expect"), c.dim());
  c.add("", got == want, compare_detail(got.str(), want.str()));
}

void claim_ricci_flat(const Context& c) { check_bool(c, "", is_ricci_flat(c.mla()), c.expect_bool()); }

void claim_einstein(const Context& c) { check_einstein_value(c, "", c.mla(), c.claim["expect"]); }

void claim_sasaki(const Context& c) {
  const Verdict v = check_sasaki(c.sasaki());
  check_bool(c, "", v.ok(), c.expect_bool(), v.summary());
  if (c.has("failing")) {
    const Check* f = v.first_failure();
    const std::string want = c.str("failing");
    c.add("failing identity", f && f->name == want, f ? compare_detail(f->name, want) : "no failure");
  }
}

void claim_z_standard(const Context& c) {
  const Verdict v = check_z_standard(c.sasaki(), c.decomposition());
  check_bool(c, "", v.ok(), c.expect_bool(), v.summary());
}

void claim_pseudo_iwasawa(const Context& c) {
  check_bool(c, "", is_pseudo_iwasawa(c.mla(), c.decomposition()), c.expect_bool());
}

void claim_ric_xi(const Context& c) {
  const auto& s = c.sasaki();
  const Vector got = ricci(c.mla()).op * s.xi;
  const Vector want = Scalar(static_cast<long>(c.dim() - 1)) * s.xi;
  c.add("", got == want, compare_detail(to_string(got), to_string(want)));
}

void claim_kahler_quotient(const Context& c) {
  const KahlerQuotient q = kahler_quotient(c.sasaki());
  check_bool(c, "", q.verdict.ok(), c.expect_bool(), q.verdict.summary());
  if (c.has("expect_algebra")) compare_algebra(c, "quotient", q.reduction.mla, "expect_algebra", "expect_metric");
}

void claim_pseudo_kahler(const Context& c) {
  const Verdict v = check_pseudo_kahler(c.pk());
  check_bool(c, "", v.ok(), c.expect_bool(), v.summary());
  c.add("omega sharp = J", c.mla().metric().two_form_to_endo(c.pk().omega) == c.pk().J);
}

void claim_nilsoliton(const Context& c) {
  const Matrix d = c.endo("D", c.dim());
  const int tau = static_cast<int>(scalar_from_json(c.claim["tau"]).to_rational().get_num().get_si());
  const NilsolitonReport r = check_generalized_nilsoliton(c.mla(), d, tau);
  c.add("equation", r.equation, r.verdict.summary());
  c.add("Einstein certified", r.einstein(), "route: " + r.route);
  const Scalar want = scalar_from_json(c.claim["lambda"]);
  c.add("lambda", r.lambda == want, compare_detail(r.lambda.str(), want.str()));
  if (c.has("trace_not_eigenvalue")) {
    check_bool(c, "-Tr D not an eigenvalue", r.trace_not_eigenvalue, bool_from_json(c.claim["trace_not_eigenvalue"]));
  }
  const StandardExtension ext = standard_extension(c.mla(), d, tau);
  check_einstein_value(c, "direct Ricci of the extension", ext.total, c.claim["lambda"]);
  const Matrix blockwise = ricci_of_standard_extension_blockwise(c.mla(), d, tau).ric;
  c.add("blockwise = direct Ricci", blockwise == ricci(ext.total).ric);
}

void claim_nikolayevsky(const Context& c) {
  const HKind kind = parse_hkind(c.str("h"));
  std::optional<Matrix> J;
  if (kind == HKind::cu) J = c.pk().J;
  const auto space = constrained_derivations(c.mla(), kind, J);
  const NikolayevskyResult res = nikolayevsky_derivation(space);
  c.add("semisimple solution found", res.N.has_value(), res.diagnostic);
  if (!res.N) return;
  c.add("Tr(N psi) = Tr psi", satisfies_nikolayevsky_equations(space, *res.N));
  if (c.has("expect")) {
    const std::string e = c.str("expect");
    if (e == "zero" || e == "nonzero") {
      check_bool(c, "N " + e, !res.N->is_zero(), e == "nonzero", "N = " + print_endomorphism(*res.N));
    } else {
      const Matrix want = c.endo("expect", c.dim());
      c.add("N", *res.N == want, compare_detail(print_endomorphism(*res.N), print_endomorphism(want)));
    }
  }
  if (c.has("rational_eigenvalues")) {
    check_bool(c, "rational eigenvalues", spectrum(*res.N).all_rational(), bool_from_json(c.claim["rational_eigenvalues"]));
  }
}

void claim_sp_id_family(const Context& c) {
  const auto& pk = c.pk();
  const auto fam = symmetric_part_identity_family(pk.mla, pk.J);
  const std::string e = c.str("expect");
  check_bool(c, e, fam.has_value(), e == "nonempty");
  if (c.has("contains")) {
    const Matrix d = c.endo("contains", c.dim());
    c.add("contains " + print_endomorphism(d), fam && fam->contains(d));
  }
  const auto space = constrained_derivations(pk.mla, HKind::cu, pk.J);
  bool has_trace = false;
  for (const auto& psi : space.basis) has_trace = has_trace || !psi.trace().is_zero();
  const auto nik = nikolayevsky_derivation(space);
  const bool nik_nonzero = nik.N ? !nik.N->is_zero() : !nik.particular.is_zero();
  c.add("feasibility equivalence", fam.has_value() == has_trace && has_trace == nik_nonzero,
        "family " + yes_no(fam.has_value()) + ", trace " + yes_no(has_trace) + ", N != 0 " + yes_no(nik_nonzero));
  if (fam) {
    bool affine = true;
    for (const auto& k : fam->kernel) affine = affine && fam->contains(fam->particular + k);
    c.add("affine structure", affine);
  }
}

Matrix seed_derivation(const Context& c, const PseudoKahler& seed) {
  if (c.str("D") == "canonical") {
    const auto d = canonical_sasaki_einstein_derivation(seed.mla, seed.J);
    if (!d) throw StructureError("no derivation with symmetric part id: the cu-Nikolayevsky derivation vanishes");
    return *d;
  }
  return c.endo("D", seed.mla.dim());
}

void claim_build_se(const Context& c) {
  const PseudoKahler& seed = c.pk();
  if (c.has("expect_error")) {
    const std::string want = c.str("expect_error");
    try {
      (void)build_sasaki_einstein(seed, seed_derivation(c, seed));
      c.add("error", false, "construction succeeded");
    } catch (const StructureError& e) {
      const std::string what = e.what();
      c.add("error", what.find(want) != std::string::npos, what);
    }
    return;
  }
  const Matrix d = seed_derivation(c, seed);
  const ZStandardSasaki se = build_sasaki_einstein(seed, d);
  const MetricLieAlgebra& out = se.structure.mla;
  const Verdict sas = check_sasaki(se.structure);
  c.add("Sasaki", sas.ok(), sas.summary());
  const Verdict zs = check_z_standard(se.structure, se.dec);
  c.add("z-standard", zs.ok(), zs.summary());
  check_einstein_value(c, "Einstein", out, c.claim["lambda"]);
  compare_algebra(c, "printed", out, "expect_algebra", "expect_metric");
  const Vector ric_xi = ricci(out).op * se.structure.xi;
  c.add("Ric(xi) = (dim-1) xi", ric_xi == Scalar(static_cast<long>(out.dim() - 1)) * se.structure.xi);
  if (!is_abelian(seed.mla.algebra())) c.add("not pseudo-Iwasawa", !is_pseudo_iwasawa(out, se.dec));

  const KahlerReduction red = kahler_reduction(se.structure, se.dec);
  const bool round_trip = print_algebra(red.data.reduction.mla.algebra()) == print_algebra(seed.mla.algebra()) &&
                          red.data.reduction.mla.gram() == seed.mla.gram() && red.data.reduction.J == seed.J &&
                          red.data.reduction.omega == seed.omega && red.data.Dcheck == d && red.data.tau == -1 &&
                          red.data.h == Scalar(2);
  c.add("reduction round-trip", round_trip);

  const KahlerQuotient kq = kahler_quotient(se.structure);
  c.add("quotient relation", kq.verdict.ok(), kq.verdict.summary());
  const KahlerEinsteinExtension ke = build_kahler_einstein(seed, d);
  c.add("quotient by the center = Kahler-Einstein build",
        print_algebra(kq.reduction.mla.algebra()) == print_algebra(ke.structure.mla.algebra()) &&
            kq.reduction.mla.gram() == ke.structure.mla.gram() && kq.reduction.J == ke.structure.J);

  const MetricLieAlgebra g = lemma_g(seed, d, -1);
  c.add("Lemma Riccig on the central extension", ricci(g).op == riccig_prediction(seed, d, -1));
  c.add("blockwise = direct Ricci (central)",
        ricci_of_central_extension_blockwise(seed.mla, {CentralCocycle{-1, -KForm::from_matrix(-(d.transpose() * seed.omega.matrix() + seed.omega.matrix() * d))},
                                                       CentralCocycle{1, Scalar(2) * seed.omega}})
                .ric == ricci(g).ric);
  const Matrix block = ricci_of_standard_extension_blockwise(g, se.dec.D, -1).ric;
  c.add("blockwise = direct Ricci (standard)", block == ricci(out).ric);
}

void claim_build_ke(const Context& c) {
  const PseudoKahler& seed = c.pk();
  const Matrix d = seed_derivation(c, seed);
  const KahlerEinsteinExtension ke = build_kahler_einstein(seed, d);
  const Verdict v = check_pseudo_kahler(ke.structure);
  c.add("pseudo-Kahler", v.ok(), v.summary());
  check_einstein_value(c, "Einstein", ke.structure.mla, c.claim["lambda"]);
  compare_algebra(c, "printed", ke.structure.mla, "expect_algebra", "expect_metric");
  if (!is_abelian(seed.mla.algebra())) {
    c.add("not pseudo-Iwasawa", !is_pseudo_iwasawa(ke.structure.mla, ke.dec));
  } else {
    c.add("pseudo-Iwasawa (abelian reduction)", is_pseudo_iwasawa(ke.structure.mla, ke.dec));
  }
}

void claim_reduce(const Context& c) {
  const auto& s = c.sasaki();
  const StandardDecomposition dec = c.decomposition();
  const KahlerReduction r = kahler_reduction(s, dec);
  compare_algebra(c, "reduction", r.data.reduction.mla, "expect_algebra", "expect_metric");
  if (c.has("expect_D")) {
    const Matrix want = c.endo("expect_D", r.data.reduction.mla.dim());
    c.add("Dcheck", r.data.Dcheck == want, compare_detail(print_endomorphism(r.data.Dcheck), print_endomorphism(want)));
  }
  if (c.has("expect_J")) {
    const Matrix want = c.endo("expect_J", r.data.reduction.mla.dim());
    c.add("J", r.data.reduction.J == want, compare_detail(print_endomorphism(r.data.reduction.J), print_endomorphism(want)));
  }
  c.add("tau = -1, h = 2", r.data.tau == -1 && r.data.h == Scalar(2), "tau = " + std::to_string(r.data.tau) + ", h = " + r.data.h.str());
  const ZStandardSasaki rebuilt = build_z_standard_sasaki(r.data);
  c.add("rebuild = original", print_algebra(rebuilt.structure.mla.algebra()) == print_algebra(s.mla.algebra()) &&
                                  rebuilt.structure.mla.gram() == s.mla.gram() && rebuilt.structure.phi == s.phi);
}

void claim_einstein_nik(const Context& c) {
  const std::string want = c.str("expect");
  try {
    const auto r = einstein_extension_with_nikolayevsky(c.mla());
    if (!r) {
      c.add("", want == "absent", "N = 0");
      return;
    }
    const auto e = is_einstein(r->extension.total);
    c.add("", want != "absent" && want != "not_ricci_flat" && e && *e == Scalar::parse(want),
          e ? "Einstein with lambda = " + e->str() : "not Einstein");
  } catch (const StructureError& e) {
    c.add("", want == "not_ricci_flat", e.what());
  }
}

void claim_fig2(const Context& c) {
  const PseudoKahler& seed = c.pk();
  const Matrix d = c.endo("D", seed.mla.dim());
  const int tau = -1;
  const Matrix w = seed.omega.matrix();
  const KForm domega = KForm::from_matrix(-(d.transpose() * w + w * d));
  const std::size_t m = seed.mla.dim();
  const auto compare = [&](const std::string& label, const MetricLieAlgebra& got) {
    const Json& e = c.claim["expect"][label];
    const std::string alg = print_algebra(parse_algebra(e["algebra"].get<std::string>()));
    const Matrix gram = parse_metric(e["metric"].get<std::string>(), got.dim());
    c.add(label, print_algebra(got.algebra()) == alg && got.gram() == gram,
          compare_detail(print_algebra(got.algebra()) + " / " + print_metric(got.gram()), alg + " / " + print_metric(gram)));
  };
  const MetricLieAlgebra g_circ = central_extension(seed.mla, {CentralCocycle{1, Scalar(2) * seed.omega}});
  compare("g_circ", g_circ);
  Matrix phi(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) phi(i, j) = seed.J(i, j);
  }
  const AlmostContactMetric circ = AlmostContactMetric::from_reeb(g_circ, phi, unit_vector(m + 1, m));
  const Verdict sv = check_sasaki(circ);
  c.add("g_circ is Sasaki", sv.ok(), sv.summary());
  const KahlerQuotient kq = kahler_quotient(circ);
  c.add("g_circ / xi = gcheck", print_algebra(kq.reduction.mla.algebra()) == print_algebra(seed.mla.algebra()) &&
                                    kq.reduction.mla.gram() == seed.mla.gram() && kq.reduction.J == seed.J);
  compare("k", central_extension(seed.mla, {CentralCocycle{tau, Scalar(tau) * domega}}));
  compare("g_std", standard_extension(seed.mla, d, tau).total);
  const MetricLieAlgebra g = lemma_g(seed, d, tau);
  compare("g", g);
  c.add("Lemma Riccig", ricci(g).op == riccig_prediction(seed, d, tau));
  compare("k_tilde", build_kahler_einstein(seed, d).structure.mla);
  compare("g_tilde", build_sasaki_einstein(seed, d).structure.mla);
}

using Evaluator = std::function<void(const Context&)>;

const std::map<std::string, Evaluator>& evaluators() {
  static const std::map<std::string, Evaluator> table = {
      {"nilpotent", claim_nilpotent},
      {"ricci_operator", claim_ricci_operator},
      {"ricci_flat", claim_ricci_flat},
      {"einstein", claim_einstein},
      {"sasaki", claim_sasaki},
      {"z_standard", claim_z_standard},
      {"pseudo_iwasawa", claim_pseudo_iwasawa},
      {"ric_xi", claim_ric_xi},
      {"kahler_quotient", claim_kahler_quotient},
      {"pseudo_kahler", claim_pseudo_kahler},
      {"nilsoliton", claim_nilsoliton},
      {"nikolayevsky", claim_nikolayevsky},
      {"sp_id_family", claim_sp_id_family},
      {"build_se", claim_build_se},
      {"build_ke", claim_build_ke},
      {"reduce", claim_reduce},
      {"einstein_nik", claim_einstein_nik},
      {"fig2", claim_fig2},
  };
  return table;
}

}  // namespace

std::vector<ClaimResult> verify_instance(const CatalogInstance& inst) {
  std::vector<ClaimResult> out;
  {
    // automatic parser round-trip on the instantiated text
    const std::string printed = print_algebra(inst.mla.algebra());
    const bool alg_ok = print_algebra(parse_algebra(printed)) == printed &&
                        same_algebra_text(inst.mla.algebra(), inst.data["algebra"].get<std::string>());
    const bool met_ok = parse_metric(print_metric(inst.mla.gram()), inst.mla.dim()) == inst.mla.gram();
    out.push_back({inst.id, inst.sample, "parse_roundtrip", "DERIVED", alg_ok && met_ok, ""});
  }
  if (!inst.data.contains("claims")) return out;
  for (const auto& claim : inst.data["claims"]) {
    const std::string name = claim.value("check", "");
    const std::string tag = claim.value("tag", "");
    Context ctx{inst, claim, name, tag, &out};
    const auto it = evaluators().find(name);
    if (it == evaluators().end()) {
      ctx.add("", false, "unknown check '" + name + "'");
      continue;
    }
    try {
      it->second(ctx);
    } catch (const std::exception& e) {
      ctx.add("", false, std::string("error: ") + e.what());
    }
  }
  return out;
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
}

Json VerifyReport::to_json() const {
  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = "verify_report";
  j["total"] = results.size();
  j["passed"] = passed();
  j["failed"] = results.size() - passed();
  Json arr = Json::array();
  for (const auto& r : results) {
    Json e;
    e["entry"] = r.entry;
    e["sample"] = r.sample;
    e["claim"] = r.claim;
    e["tag"] = r.tag;
    e["passed"] = r.passed;
    if (!r.detail.empty()) e["detail"] = r.detail;
    arr.push_back(e);
  }
  j["results"] = arr;
  return j;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  std::string last_key;
  std::size_t group_total = 0, group_passed = 0;
  const auto flush = [&]() {
    if (!last_key.empty()) {
      os << (group_passed == group_total ? "PASS " : "FAIL ") << last_key << "  (" << group_passed << "/"
         << group_total << ")\n";
    }
  };
  for (const auto& r : results) {
    const std::string key = r.entry + (r.sample.empty() ? "" : " [" + r.sample + "]");
    if (key != last_key) {
      flush();
      last_key = key;
      group_total = group_passed = 0;
    }
    ++group_total;
    if (r.passed) ++group_passed;
  }
  flush();
  for (const auto& r : results) {
    if (!r.passed) {
      os << "  failed: " << r.entry << (r.sample.empty() ? "" : " [" + r.sample + "]") << " " << r.claim;
      if (!r.detail.empty()) os << ": " << r.detail;
      os << "\n";
    }
  }
  os << passed() << "/" << results.size() << " checks passed\n";
  return os.str();
}

VerifyReport verify_catalog(const std::optional<std::string>& id, const std::map<std::string, Scalar>& overrides) {
  VerifyReport report;
  bool found = false;
  for (const auto& entry : catalog()) {
    if (id && entry.id != *id) continue;
    found = true;
    for (const auto& sample : entry.samples(overrides)) {
      try {
        const CatalogInstance inst = instantiate(entry, sample);
        auto rs = verify_instance(inst);
        report.results.insert(report.results.end(), rs.begin(), rs.end());
      } catch (const std::exception& e) {
        report.results.push_back({entry.id, sample.label, "instantiate", "", false, e.what()});
      }
    }
  }
  if (id && !found) throw CatalogError("unknown catalog id '" + *id + "'");
  return report;
}

}  // namespace liegeom
