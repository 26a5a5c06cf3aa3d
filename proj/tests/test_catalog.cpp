#include "doctest.h"
#include "liegeom/catalog.hpp"
#include "liegeom/notation.hpp"

using namespace liegeom;

TEST_CASE("placeholder expressions") {
  const std::map<std::string, Scalar> vars{{"a", Scalar(2)}, {"mu", Scalar::rational(-1, 2)}};
  CHECK(evaluate_expression("-a/3", vars) == Scalar::rational(-2, 3));
  CHECK(evaluate_expression("-mu*mu/(8*a)", vars) == Scalar::rational(-1, 64));
  CHECK(evaluate_expression("2*(1-a)", vars) == Scalar(-2));
  CHECK(evaluate_expression("sqrt(6)/4", vars) == Scalar::quadratic(0, mpq_class(1, 4), 6));
  CHECK_THROWS_AS(evaluate_expression("b", vars), MathError);
  CHECK_THROWS_AS(evaluate_expression("1/(a-2)", vars), MathError);
  CHECK_THROWS_AS(evaluate_expression("(1", vars), MathError);
  CHECK(substitute_placeholders("{a/3}*e27+e12", vars) == "(2/3)*e27+e12");
  CHECK(print_algebra(parse_algebra(substitute_placeholders("(0,0,{-a}*e12)", vars))) == "(0,0,-2*e12)");
}

TEST_CASE("catalog contents and sample expansion") {
  const auto& all = catalog();
  REQUIRE(all.size() >= 16);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].id < all[i].id);
  for (const char* id : {"ex1-heisenberg-r", "ex2-filiform4", "prop5-dim3", "prop5-dim5-pos", "prop5-dim5-neg",
                         "thm4.1-family1", "thm4.1-family2", "thm4.1-family3", "abelian-r2", "abelian-r4",
                         "abelian-r6", "h11-omega1", "h11-omega2", "dim9-non-nikolayevsky", "fig2-r2"}) {
    CAPTURE(id);
    CHECK(find_entry(id) != nullptr);
  }
  CHECK(find_entry("thm4.1-family2")->samples().size() == 5);
  CHECK(find_entry("thm4.1-family3")->samples().size() == 25);
  CHECK(find_entry("ex1-heisenberg-r")->samples().size() == 12);
  CHECK(find_entry("abelian-r6")->samples().size() == 8);
  const auto h11 = find_entry("h11-omega2")->samples();
  CHECK(h11.size() == 4);  // a = 0 excluded
  const auto pinned = find_entry("thm4.1-family2")->samples({{"a", Scalar(1)}});
  REQUIRE(pinned.size() == 1);
  CHECK(pinned[0].label == "a=1");
  CHECK_THROWS_AS(find_entry("thm4.1-family2")->samples({{"zz", Scalar(1)}}), CatalogError);
}

TEST_CASE("single-entry verification: family (2) at a = 1") {
  const VerifyReport r = verify_catalog(std::string("thm4.1-family2"), {{"a", Scalar(1)}});
  CHECK_MESSAGE(r.ok(), r.summary());
  auto passed = [&](const std::string& claim) {
    for (const auto& c : r.results) {
      if (c.claim == claim) return c.passed;
    }
    return false;
  };
  CHECK(passed("sasaki"));
  CHECK(passed("einstein"));
  CHECK(passed("z_standard"));
}

TEST_CASE("the doctored entry fails Sasaki with a named identity") {
  const CatalogEntry* e = find_entry("prop5-doctored");
  REQUIRE(e);
  const CatalogInstance inst = instantiate(*e, e->samples().front());
  REQUIRE(inst.sasaki);
  const Verdict v = check_sasaki(*inst.sasaki);
  REQUIRE_FALSE(v.ok());
  CHECK(v.first_failure()->name == "d eta = 2 Phi");
}

TEST_CASE("full catalog verification passes and is deterministic") {
  const VerifyReport a = verify_catalog();
  CHECK_MESSAGE(a.ok(), a.summary());
  CHECK(a.results.size() >= 60);
  const VerifyReport b = verify_catalog();
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.summary() == b.summary());
}

TEST_CASE("catalog input errors") {
  CHECK_THROWS_AS(verify_catalog(std::string("no-such-entry")), CatalogError);
  CHECK_THROWS_AS(parse_catalog_file("bad.json", "{"), CatalogError);
  CHECK_THROWS_AS(parse_catalog_file("bad.json", R"([{"id": "x"}])"), CatalogError);
  // an unknown check is reported as a failed claim, not an exception
  const auto entries = parse_catalog_file(
      "t.json", R"J([{"id": "t", "algebra": "(0,0,e12)", "metric": "e1*e1+e2*e2+e3*e3", "claims": [{"check": "bogus"}]}])J");
  const auto results = verify_instance(instantiate(entries[0], entries[0].samples().front()));
  REQUIRE(results.size() == 2);
  CHECK(results[0].passed);  // parser round-trip
  CHECK_FALSE(results[1].passed);
}
