#include "liegeom/json_io.hpp"

#include <fstream>
#include <sstream>

#include "liegeom/notation.hpp"

namespace liegeom {

namespace {

Json header(const char* type) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = type;
  return j;
}

void check_schema(const Json& j) {
  if (!j.is_object()) throw JsonError("expected a JSON object");
  if (j.contains("schema") && j["schema"] != kSchemaVersion) {
    throw JsonError("unsupported schema '" + j["schema"].dump() + "' (expected " + kSchemaVersion + ")");
  }
}

std::string field(const Json& j, const char* name) {
  if (!j.contains(name)) throw JsonError(std::string("missing field '") + name + "'");
  if (!j[name].is_string()) throw JsonError(std::string("field '") + name + "' must be a string");
  return j[name].get<std::string>();
}

Scalar scalar_field(const Json& j, const char* name) {
  if (!j.contains(name)) throw JsonError(std::string("missing field '") + name + "'");
  const Json& v = j[name];
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  throw JsonError(std::string("field '") + name + "' must be an integer or a scalar string");
}

void put_algebra(Json& j, const MetricLieAlgebra& m) {
  j["algebra"] = print_algebra(m.algebra());
  j["metric"] = print_metric(m.gram());
}

}  // namespace

Json to_json(const MetricLieAlgebra& m) {
  Json j = header("metric_lie_algebra");
  put_algebra(j, m);
  return j;
}

Json to_json(const AlmostContactMetric& s) {
  Json j = header("sasaki");
  put_algebra(j, s.mla);
  j["phi"] = print_endomorphism(s.phi);
  j["xi"] = print_vector(s.xi);
  j["eta"] = print_form(s.eta);
  return j;
}

Json to_json(const PseudoKahler& s) {
  Json j = header("pseudo_kahler");
  put_algebra(j, s.mla);
  j["J"] = print_endomorphism(s.J);
  j["omega"] = print_form(s.omega);
  return j;
}

Json to_json(const ZStandardData& d) {
  Json j = header("z_standard_data");
  j["reduction"] = to_json(d.reduction);
  j["D"] = print_endomorphism(d.Dcheck);
  j["tau"] = d.tau;
  j["h"] = d.h.str();
  return j;
}

Json to_json(const StandardDecomposition& dec) {
  Json j;
  Json ideal = Json::array();
  for (const auto& v : dec.ideal) ideal.push_back(print_vector(v));
  j["ideal"] = ideal;
  j["e0"] = print_vector(dec.e0);
  j["tau"] = dec.tau;
  j["D"] = print_endomorphism(dec.D);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["ok"] = v.ok();
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

MetricLieAlgebra metric_lie_algebra_from_json(const Json& j) {
  check_schema(j);
  if (j.contains("reduction")) return metric_lie_algebra_from_json(j["reduction"]);
  LieAlgebra g = parse_algebra(field(j, "algebra"));
  const std::size_t n = g.dim();
  return MetricLieAlgebra(std::move(g), parse_metric(field(j, "metric"), n));
}

AlmostContactMetric sasaki_from_json(const Json& j) {
  MetricLieAlgebra m = metric_lie_algebra_from_json(j);
  const std::size_t n = m.dim();
  Matrix phi = parse_endomorphism(field(j, "phi"), n);
  Vector xi = parse_vector(field(j, "xi"), n);
  AlmostContactMetric s = AlmostContactMetric::from_reeb(std::move(m), std::move(phi), std::move(xi));
  if (j.contains("eta")) s.eta = parse_form(field(j, "eta"), n, 1);
  return s;
}

PseudoKahler pseudo_kahler_from_json(const Json& j) {
  check_schema(j);
  LieAlgebra g = parse_algebra(field(j, "algebra"));
  const std::size_t n = g.dim();
  const bool has_j = j.contains("J"), has_omega = j.contains("omega"), has_metric = j.contains("metric");
  if (!has_j && !has_omega) throw JsonError("a pseudo-Kähler bundle needs 'J' or 'omega'");
  if (!has_metric) {
    if (!has_j || !has_omega) throw JsonError("without 'metric' both 'J' and 'omega' are required (g = -omega J)");
    const Matrix J = parse_endomorphism(field(j, "J"), n);
    const KForm omega = parse_form(field(j, "omega"), n, 2);
    Matrix gram = -(omega.matrix() * J);
    return PseudoKahler{MetricLieAlgebra(std::move(g), std::move(gram)), J, omega};
  }
  MetricLieAlgebra m(std::move(g), parse_metric(field(j, "metric"), n));
  if (has_j && has_omega) {
    return PseudoKahler{std::move(m), parse_endomorphism(field(j, "J"), n), parse_form(field(j, "omega"), n, 2)};
  }
  if (has_j) return PseudoKahler::from_J(std::move(m), parse_endomorphism(field(j, "J"), n));
  return PseudoKahler::from_omega(std::move(m), parse_form(field(j, "omega"), n, 2));
}

ZStandardData z_standard_data_from_json(const Json& j) {
  check_schema(j);
  if (!j.contains("reduction")) throw JsonError("missing field 'reduction'");
  ZStandardData d;
  d.reduction = pseudo_kahler_from_json(j["reduction"]);
  d.Dcheck = parse_endomorphism(field(j, "D"), d.reduction.mla.dim());
  if (!j.contains("tau") || !j["tau"].is_number_integer()) throw JsonError("field 'tau' must be +1 or -1");
  d.tau = j["tau"].get<int>();
  d.h = scalar_field(j, "h");
  return d;
}

Json read_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  Json j = Json::parse(text, nullptr, false);
  if (!j.is_discarded() && j.is_object()) return j;
  // plain algebra text
  std::string trimmed;
  for (char c : text) {
    if (c != '\n' && c != '\r') trimmed += c;
  }
  Json out;
  out["algebra"] = trimmed;
  return out;
}

}  // namespace liegeom
