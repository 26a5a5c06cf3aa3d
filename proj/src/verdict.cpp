#include "liegeom/verdict.hpp"

#include <utility>

namespace liegeom {

bool Verdict::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void Verdict::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void Verdict::merge(const Verdict& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
}

const Check* Verdict::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string Verdict::summary() const {
  const Check* f = first_failure();
  if (!f) return "ok";
  return f->detail.empty() ? f->name : f->name + ": " + f->detail;
}

}  // namespace liegeom
