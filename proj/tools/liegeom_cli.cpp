// liegeom: command-line front end for the library and the embedded catalog.
//
// Exit codes: 0 success / all claims pass, 1 a checked property fails,
// 2 input error (bad file, syntax, unknown id or parameter).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liegeom/catalog.hpp"
#include "liegeom/notation.hpp"

using namespace liegeom;

namespace {

struct InputOptions {
  std::string file;
  std::string metric;
  std::string id;
  std::vector<std::string> params;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool need_metric) {
  cmd->add_option("input", in.file, "JSON bundle or .salg algebra file");
  if (need_metric) cmd->add_option("--metric", in.metric, "metric file (.smet) or metric text");
  cmd->add_option("--id", in.id, "catalog entry id instead of a file");
  cmd->add_option("--param", in.params, "pin a catalog parameter, k=v (repeatable)");
}

std::string read_text_or_file(const std::string& s) {
  std::ifstream f(s);
  if (!f) return s;
  std::stringstream buf;
  buf << f.rdbuf();
  std::string t = buf.str();
  while (!t.empty() && (t.back() == '\n' || t.back() == '\r' || t.back() == ' ')) t.pop_back();
  return t;
}

std::map<std::string, Scalar> parse_params(const std::vector<std::string>& params) {
  std::map<std::string, Scalar> out;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw CatalogError("--param expects k=v, got '" + p + "'");
    out[p.substr(0, eq)] = evaluate_expression(p.substr(eq + 1), {});
  }
  return out;
}

CatalogInstance catalog_instance(const InputOptions& in) {
  const CatalogEntry* e = find_entry(in.id);
  if (!e) throw CatalogError("unknown catalog id '" + in.id + "'");
  const auto samples = e->samples(parse_params(in.params));
  if (samples.empty()) throw CatalogError("no parameter sample of '" + in.id + "' matches the --param values");
  return instantiate(*e, samples.front());
}

/// Input as a JSON bundle: from the catalog (with its structure) or a file.
Json load_bundle(const InputOptions& in) {
  if (!in.id.empty()) {
    const CatalogInstance inst = catalog_instance(in);
    if (inst.sasaki) return to_json(*inst.sasaki);
    if (inst.pseudo_kahler) return to_json(*inst.pseudo_kahler);
    return to_json(inst.mla);
  }
  if (in.file.empty()) throw JsonError("an input file or --id is required");
  Json j = read_bundle_file(in.file);
  if (!in.metric.empty()) j["metric"] = read_text_or_file(in.metric);
  return j;
}

Json verdict_report(const Verdict& v) { return to_json(v); }

int emit(const Json& j, bool ok = true) {
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

/// Matrix rows as strings "[a, b, ...]" so the JSON stays readable.
Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string row = "[";
    for (std::size_t j = 0; j < m.cols(); ++j) row += (j ? ", " : "") + m(i, j).str();
    rows.push_back(row + "]");
  }
  return rows;
}

Matrix derivation_argument(const std::string& text, std::size_t n) {
  const std::string t = read_text_or_file(text);
  if (t == "id") return Matrix::identity(n);
  return parse_endomorphism(t, n);
}

Matrix se_derivation(const PseudoKahler& pk, const std::string& d) {
  if (d.empty() || d == "canonical") {
    const auto c = canonical_sasaki_einstein_derivation(pk.mla, pk.J);
    if (!c) throw StructureError("no derivation with symmetric part id: the cu-Nikolayevsky derivation vanishes");
    return *c;
  }
  return derivation_argument(d, pk.mla.dim());
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tol = std::getenv("LIEGEOM_FLOAT_TOL")) {
    try {
      Scalar::set_float_tolerance(std::stod(tol));
    } catch (const std::exception&) {
      std::cerr << "error: LIEGEOM_FLOAT_TOL must be a number\n";
      return 2;
    }
  }

  CLI::App app{"Exact curvature and Sasaki/Kahler-Einstein constructions on metric Lie algebras"};
  app.require_subcommand(1);

  InputOptions in;
  std::string hkind = "cu", dtext, tau_text = "1", e0_text, json_out;
  std::string structure_file;

  auto* ricci_cmd = app.add_subcommand("ricci", "Ricci tensor and operator");
  add_input_options(ricci_cmd, in, true);

  auto* sasaki_cmd = app.add_subcommand("sasaki", "check the Sasaki conditions of a structure bundle");
  add_input_options(sasaki_cmd, in, false);

  auto* kahler_cmd = app.add_subcommand("kahler", "check a pseudo-Kahler bundle, or the Kahler quotient of a Sasaki bundle");
  add_input_options(kahler_cmd, in, false);

  auto* nik_cmd = app.add_subcommand("nikolayevsky", "h-constrained Nikolayevsky derivation");
  nik_cmd->set_help_flag("--help", "Print this help message and exit");
  add_input_options(nik_cmd, in, true);
  nik_cmd->add_option("--h", hkind, "constraint algebra: gl, co or cu")->check(CLI::IsMember({"gl", "co", "cu"}));
  nik_cmd->add_option("--structure", structure_file, "pseudo-Kahler bundle providing J (needed for cu)");

  auto* nil_cmd = app.add_subcommand("nilsoliton", "generalized nilsoliton check of a standard extension");
  nil_cmd->alias("check-nilsoliton");
  add_input_options(nil_cmd, in, true);
  nil_cmd->add_option("--D", dtext, "derivation (endomorphism text, file, or 'id')")->required();
  nil_cmd->add_option("--tau", tau_text, "sign of g(e0,e0): 1 or -1");

  auto* se_cmd = app.add_subcommand("extend-se", "z-standard Sasaki-Einstein extension of a pseudo-Kahler algebra");
  add_input_options(se_cmd, in, false);
  se_cmd->add_option("--D", dtext, "derivation with symmetric part id (default: canonical)");

  auto* ke_cmd = app.add_subcommand("extend-ke", "Kahler-Einstein extension of a pseudo-Kahler algebra");
  add_input_options(ke_cmd, in, false);
  ke_cmd->add_option("--D", dtext, "derivation with symmetric part id (default: canonical)");

  auto* red_cmd = app.add_subcommand("reduce", "Kahler reduction of a z-standard Sasaki algebra");
  add_input_options(red_cmd, in, false);
  red_cmd->add_option("--e0", e0_text, "vector spanning the complement of the ideal (default: last basis vector)");

  auto* cat_cmd = app.add_subcommand("catalog", "inspect the embedded catalog");
  cat_cmd->require_subcommand(1);
  auto* cat_list = cat_cmd->add_subcommand("list", "list entry ids");
  std::string show_id;
  auto* cat_show = cat_cmd->add_subcommand("show", "print one entry");
  cat_show->add_option("id", show_id)->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "verify every catalog claim");
  verify_cmd->alias("verify");
  verify_cmd->add_option("--id", in.id, "restrict to one entry");
  verify_cmd->add_option("--param", in.params, "pin a parameter, k=v (repeatable)");
  verify_cmd->add_option("--json", json_out, "write the JSON report to this file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ricci_cmd->parsed()) {
      const MetricLieAlgebra m = metric_lie_algebra_from_json(load_bundle(in));
      const RicciData r = ricci(m);
      Json j;
      j["schema"] = kSchemaVersion;
      j["type"] = "ricci";
      j["algebra"] = print_algebra(m.algebra());
      j["metric"] = print_metric(m.gram());
      j["ricci_operator"] = print_endomorphism(r.op);
      j["ricci_operator_matrix"] = matrix_rows(r.op);
      j["ricci_tensor"] = print_metric(r.ric);
      j["einstein"] = r.einstein ? Json(r.einstein->str()) : Json(nullptr);
      return emit(j);
    }
    if (sasaki_cmd->parsed()) {
      const Json b = load_bundle(in);
      const AlmostContactMetric s = sasaki_from_json(b);
      const Verdict v = check_sasaki(s);
      Json j = verdict_report(v);
      j["type"] = "sasaki_check";
      return emit(j, v.ok());
    }
    if (kahler_cmd->parsed()) {
      const Json b = load_bundle(in);
      if (b.contains("phi")) {
        const KahlerQuotient q = kahler_quotient(sasaki_from_json(b));
        Json j = to_json(q.reduction);
        j["verdict"] = verdict_report(q.verdict);
        return emit(j, q.verdict.ok());
      }
      const PseudoKahler pk = pseudo_kahler_from_json(b);
      const Verdict v = check_pseudo_kahler(pk);
      Json j = verdict_report(v);
      j["type"] = "pseudo_kahler_check";
      return emit(j, v.ok());
    }
    if (nik_cmd->parsed()) {
      const Json b = load_bundle(in);
      const HKind kind = parse_hkind(hkind);
      MetricLieAlgebra m = metric_lie_algebra_from_json(b);
      std::optional<Matrix> J;
      if (kind == HKind::cu) {
        Json s = structure_file.empty() ? b : read_bundle_file(structure_file);
        if (!s.contains("algebra")) s["algebra"] = b["algebra"];
        if (!s.contains("metric") && b.contains("metric")) s["metric"] = b["metric"];
        J = pseudo_kahler_from_json(s).J;
      }
      const auto space = constrained_derivations(m, kind, J);
      const NikolayevskyResult r = nikolayevsky_derivation(space);
      Json j;
      j["schema"] = kSchemaVersion;
      j["type"] = "nikolayevsky";
      j["h"] = to_string(kind);
      j["space_dim"] = space.basis.size();
      j["semisimple"] = r.semisimple;
      if (r.N) {
        j["N"] = print_endomorphism(*r.N);
        Json ev = Json::array();
        for (const auto& e : spectrum(*r.N).values) ev.push_back(e.str());
        j["eigenvalues"] = ev;
      } else {
        j["N"] = nullptr;
        j["particular"] = print_endomorphism(r.particular);
      }
      if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
      return emit(j, r.N.has_value());
    }
    if (nil_cmd->parsed()) {
      const MetricLieAlgebra m = metric_lie_algebra_from_json(load_bundle(in));
      const int tau = std::stoi(tau_text);
      if (tau != 1 && tau != -1) throw MathError("--tau must be 1 or -1");
      const Matrix d = derivation_argument(dtext, m.dim());
      const NilsolitonReport r = check_generalized_nilsoliton(m, d, tau);
      Json j = verdict_report(r.verdict);
      j["type"] = "nilsoliton";
      j["equation"] = r.equation;
      j["lambda"] = r.lambda.str();
      j["trace_condition"] = r.trace_condition;
      j["trace_not_eigenvalue"] = r.trace_not_eigenvalue;
      j["einstein"] = r.einstein();
      j["route"] = r.route;
      j["extension"] = to_json(standard_extension(m, d, tau).total);
      return emit(j, r.einstein());
    }
    if (se_cmd->parsed() || ke_cmd->parsed()) {
      const PseudoKahler pk = pseudo_kahler_from_json(load_bundle(in));
      const Matrix d = se_derivation(pk, dtext);
      if (se_cmd->parsed()) {
        const ZStandardSasaki se = build_sasaki_einstein(pk, d);
        Json j = to_json(se.structure);
        j["decomposition"] = to_json(se.dec);
        const auto e = is_einstein(se.structure.mla);
        j["einstein"] = e ? Json(e->str()) : Json(nullptr);
        return emit(j);
      }
      const KahlerEinsteinExtension ke = build_kahler_einstein(pk, d);
      Json j = to_json(ke.structure);
      j["decomposition"] = to_json(ke.dec);
      const auto e = is_einstein(ke.structure.mla);
      j["einstein"] = e ? Json(e->str()) : Json(nullptr);
      return emit(j);
    }
    if (red_cmd->parsed()) {
      const AlmostContactMetric s = sasaki_from_json(load_bundle(in));
      const Vector e0 = e0_text.empty() ? unit_vector(s.mla.dim(), s.mla.dim() - 1) : parse_vector(e0_text, s.mla.dim());
      const KahlerReduction r = kahler_reduction(s, standard_decomposition_for(s.mla, e0));
      Json j = to_json(r.data);
      j["b"] = print_vector(r.b);
      j["xi"] = print_vector(r.xi);
      j["e0"] = print_vector(r.e0);
      return emit(j);
    }
    if (cat_list->parsed()) {
      for (const auto& e : catalog()) {
        std::cout << e.id << "\t" << e.source << "\n";
      }
      return 0;
    }
    if (cat_show->parsed()) {
      const CatalogEntry* e = find_entry(show_id);
      if (!e) throw CatalogError("unknown catalog id '" + show_id + "'");
      Json j = e->data;
      Json samples = Json::array();
      for (const auto& s : e->samples()) samples.push_back(s.label);
      j["expanded_samples"] = samples;
      return emit(j);
    }
    if (verify_cmd->parsed()) {
      const std::optional<std::string> id = in.id.empty() ? std::nullopt : std::optional<std::string>(in.id);
      const VerifyReport report = verify_catalog(id, parse_params(in.params));
      if (json_out == "-") {
        std::cout << report.to_json().dump(2) << "\n";
      } else {
        std::cout << report.summary();
        if (!json_out.empty()) {
          std::ofstream out(json_out);
          if (!out) throw JsonError("cannot write '" + json_out + "'");
          out << report.to_json().dump(2) << "\n";
        }
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const StructureError& e) {
    Json j;
    j["error"] = "structure";
    j["message"] = e.what();
    std::cerr << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "input";
    j["message"] = e.what();
    std::cerr << j.dump(2) << "\n";
    return 2;
  }
  return 2;
}
