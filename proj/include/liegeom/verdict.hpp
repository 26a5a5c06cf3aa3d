#pragma once

#include <string>
#include <vector>

namespace liegeom {

/// One named condition of a verification, with a human-readable detail
/// (typically the first failing basis pair or the offending value).
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Per-condition breakdown of a verification; passes iff every check passes.
struct Verdict {
  std::vector<Check> checks;

  bool ok() const;
  explicit operator bool() const { return ok(); }
  void add(std::string name, bool passed, std::string detail = {});
  /// Appends every check of `other`, prefixing names with `prefix`.
  void merge(const Verdict& other, const std::string& prefix = {});
  /// The first failing check, or nullptr.
  const Check* first_failure() const;
  /// "ok" or "<name>: <detail>" of the first failure.
  std::string summary() const;
};

}  // namespace liegeom
