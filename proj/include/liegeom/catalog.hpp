#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liegeom/json_io.hpp"

namespace liegeom {

/// Evaluates an arithmetic expression over named scalars: + − * / unary −,
/// parentheses, rational literals and sqrt(·) of a rational.
Scalar evaluate_expression(std::string_view expr, const std::map<std::string, Scalar>& vars);
/// Replaces every "{expr}" in `text` by "(value)".
std::string substitute_placeholders(std::string_view text, const std::map<std::string, Scalar>& vars);

/// One parameter assignment of an entry, with its display label
/// "lambda=1,mu=-1" (empty for unparametrized entries).
struct ParameterSample {
  std::map<std::string, Scalar> values;
  std::string label;
};

/// A catalog entry as stored in the data files.
struct CatalogEntry {
  std::string id;
  std::string source;
  std::string file;
  Json data;
  /// All parameter samples, honoring `samples`, `params` grids (default
  /// {−1, 0, 1/2, 1, 2}) and per-parameter `exclude` lists.
  std::vector<ParameterSample> samples(const std::map<std::string, Scalar>& overrides = {}) const;
  std::vector<std::string> parameter_names() const;
};

/// The embedded catalog, sorted by id.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& id);
/// Parses catalog entries from the text of one data file (a JSON array).
std::vector<CatalogEntry> parse_catalog_file(const std::string& name, const std::string& text);

/// An entry evaluated at one parameter sample.
struct CatalogInstance {
  std::string id;
  std::string sample;
  Json data;  // placeholders substituted
  MetricLieAlgebra mla;
  std::optional<AlmostContactMetric> sasaki;
  std::optional<PseudoKahler> pseudo_kahler;
};
CatalogInstance instantiate(const CatalogEntry& entry, const ParameterSample& sample);

struct ClaimResult {
  std::string entry;
  std::string sample;
  std::string claim;
  std::string tag;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<ClaimResult> results;
  std::size_t passed() const;
  bool ok() const { return passed() == results.size(); }
  Json to_json() const;
  /// One line per entry and sample plus failures and totals.
  std::string summary() const;
};

/// Evaluates every claim of one instance (plus the automatic parser
/// round-trip claim).
std::vector<ClaimResult> verify_instance(const CatalogInstance& inst);

/// Input problems in a verify request (unknown id or parameter).
class CatalogError : public MathError {
 public:
  using MathError::MathError;
};

/// Runs all claims over all entries (or only `id`) and their samples, in
/// entry-id order. `overrides` pins parameters to single values.
VerifyReport verify_catalog(const std::optional<std::string>& id = std::nullopt,
                            const std::map<std::string, Scalar>& overrides = {});

}  // namespace liegeom
